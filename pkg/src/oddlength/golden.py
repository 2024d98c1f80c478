"""
Published coefficient tables, transcribed verbatim (typos included).

Column ``n`` lists the coefficients of the generating polynomial for rank ``n``.
Marked entries are the coefficients printed in red, i.e. the published
witnesses of non-unimodality.
"""

# odd length over W(A_n), worked examples n = 1..6
EXAMPLES = {
    1: (1, 1),
    2: (1, 4, 1),
    3: (1, 8, 6, 8, 1),
    4: (1, 12, 23, 48, 23, 12, 1),
    5: (1, 16, 59, 137, 147, 147, 137, 59, 16, 1),
    6: (1, 20, 113, 300, 631, 832, 1246, 832, 631, 300, 113, 20, 1),
}

# odd length over W(A_n), n = 1..14
FIGURE1 = {
    1: (1, 1),
    2: (1, 4, 1),
    3: (1, 8, 6, 8, 1),
    4: (1, 12, 23, 48, 23, 12, 1),
    5: (1, 16, 59, 137, 147, 147, 137, 59, 16, 1),
    6: (1, 20, 113, 300, 631, 832, 1246, 832, 631, 300, 113, 20, 1),
    7: (1, 24, 183, 620, 1878, 2956, 5481, 5616, 6802, 5616, 5481, 2956, 1878, 620, 183, 24, 1),
    8: (
        1, 28, 269, 1184, 4201, 8524, 18548, 28244, 42070, 48420, 59902, 48420, 42070, 28244,
        18548, 8524, 4201, 1184, 269, 28, 1,
    ),
    9: (
        1, 32, 371, 2056, 8155, 22273, 54124, 105147, 173888, 254631, 350506, 402868, 440348,
        440348, 402868, 350506, 254631, 173888, 105147, 54124, 22273, 8155, 2056, 371, 32, 1,
    ),
    10: (
        1, 36, 489, 3296, 14823, 50940, 134230, 310324, 585142, 1060652, 1626663, 2440224,
        3116617, 3940532, 4285235, 4778392, 4285235, 3940532, 3116617, 2440224, 1626663,
        1060652, 585142, 310324, 134230, 50940, 14823, 3296, 489, 36, 1,
    ),
    11: (
        1, 40, 623, 4968, 25579, 102584, 302591, 817040, 1779709, 3727112, 6383306, 10999144,
        15876597, 23094400, 28960385, 37367608, 40981666, 46229504, 45695886, 46229504,
        40981666, 37367608, 28960385, 23094400, 15876597, 10999144, 6383306, 3727112, 1779709,
        817040, 302591, 102584, 25579, 4968, 623, 40, 1,
    ),
    12: (
        1, 44, 773, 7136, 41995, 189532, 644400, 1950708, 4797444, 11009044, 21371677, 40427016,
        67176502, 109067416, 158426584, 227994816, 296523080, 380494144, 444961297, 515222884,
        544667447, 577072920, 544667447, 515222884, 444961297, 380494144, 296523080, 227994816,
        158426584, 109067416, 67176502, 40427016, 21371677, 11009044, 4797444, 1950708, 644400,
        189532, 41995, 7136, 773, 44, 1,
    ),
    13: (
        1, 48, 939, 9864, 65887, 330648, 1287220, 4241497, 11733016, 29364967, 65173557,
        133646843, 252077108, 444000080, 724445818, 1126089020, 1648976512, 2300776313,
        3049166295, 3875492392, 4704025183, 5523283878, 6156913063, 6647055284, 6890990167,
        6890990167, 6647055284, 6156913063, 5523283878, 4704025183, 3875492392, 3049166295,
        2300776313, 1648976512, 1126089020, 724445818, 444000080, 252077108, 133646843,
        65173557, 29364967, 11733016, 4241497, 1287220, 330648, 65887, 9864, 939, 48, 1,
    ),
    14: (
        1, 52, 1121, 13216, 99335, 551604, 2411214, 8648368, 26837670, 73107128, 180535647,
        397580820, 825351072, 1563580256, 2816736057, 1563580256, 2816736057, 4728979076,
        7669867339, 11628091516, 17190758276, 23892874904, 32526492523, 41831536516,
        52890180033, 63197491888, 74391276942, 82890039732, 91181445876, 94927984924,
        97989421788, 94927984924, 91181445876, 82890039732, 74391276942, 63197491888,
        52890180033, 41831536516, 32526492523, 23892874904, 17190758276, 11628091516,
        7669867339, 4728979076, 2816736057, 1563580256, 825351072, 397580820, 180535647,
        73107128, 26837670, 8648368, 2411214, 551604, 99335, 13216, 1121, 52, 1,
    ),
}

# inv_{3,1} over W(A_n), n = 1..12
TABLE2 = {
    1: (1, 1),
    2: (1, 4, 1),
    3: (1, 11, 11, 1),
    4: (1, 22, 37, 37, 22, 1),
    5: (1, 35, 99, 225, 225, 99, 35, 1),
    6: (1, 48, 249, 845, 1377, 1377, 845, 249, 48, 1),
    7: (1, 61, 573, 2361, 5211, 7658, 8590, 7658, 5211, 2361, 573, 61, 1),
    8: (
        1, 74, 1130, 5295, 15649, 32338, 55130, 71823, 71823, 55130, 32338, 15649, 5295, 1130,
        74, 1,
    ),
    9: (
        1, 87, 1904, 10548, 43536, 117477, 260742, 442552, 601209, 672688, 601209, 442552,
        260742, 117477, 43536, 10548, 1904, 87, 1,
    ),
    10: (
        1, 100, 2855, 20611, 114529, 370193, 968743, 1964091, 3270704, 4631351, 5624480,
        5981484, 5624480, 4631351, 3270704, 1964091, 968743, 370193, 114529, 20611, 2855, 100, 1,
    ),
    11: (
        1, 113, 3975, 39685, 266099, 990566, 2968490, 7107245, 14396018, 25132683, 38809778,
        52682302, 63316023, 67575644, 63316023, 52682302, 38809778, 25132683, 14396018, 7107245,
        2968490, 990566, 266099, 39685, 3975, 113, 1,
    ),
    12: (
        1, 126, 5264, 71979, 536350, 2353010, 8258521, 23681728, 57073451, 118210113, 216769276,
        351093447, 506479874, 657393039, 767681103, 807806236, 767681103, 657393039, 506479874,
        351093447, 216769276, 118210113, 57073451, 23681728, 8258521, 2353010, 536350, 71979,
        5264, 126, 1,
    ),
}

# L_{2,1} over W(B_n), n = 2..10
TABLE_B = {
    2: (1, 3, 3, 1),
    3: (1, 7, 11, 10, 11, 7, 1),
    4: (1, 11, 25, 52, 70, 66, 70, 52, 25, 11, 1),
    5: (1, 15, 55, 166, 274, 367, 507, 535, 535, 507, 367, 274, 166, 55, 15, 1),
    6: (
        1, 19, 105, 344, 762, 1387, 2442, 3384, 4118, 5073, 5405, 5405, 5073, 4118, 3384, 2442,
        1387, 762, 344, 105, 19, 1,
    ),
    7: (
        1, 23, 171, 646, 1998, 4365, 9168, 15287, 21931, 31544, 40607, 48783, 55590, 60632,
        63628, 60632, 55590, 48783, 40607, 31544, 21931, 15287, 9168, 4365, 1998, 646, 171, 23,
        1,
    ),
    8: (
        1, 27, 253, 1168, 4466, 11043, 50151, 88018, 142191, 220588, 309201, 401116, 517149,
        621804, 712313, 786655, 837237, 864398, 837237, 786655, 712313, 621804, 517149, 401116,
        309201, 220588, 142191, 88018, 50151, 11043, 4466, 1168, 253, 27, 1,
    ),
    9: (
        1, 31, 351, 1986, 8494, 25025, 66836, 153295, 308066, 559876, 989001, 1552734, 2261174,
        3227833, 4338023, 5611753, 6953616, 8358201, 9758875, 10968189, 11994272, 12655795,
        13103853, 13103853, 12655795, 11994272, 10968189, 9758875, 8358201, 6953616, 5611753,
        4338023, 3227833, 2261174, 1552734, 989001, 559876, 308066, 153295, 66836, 25025, 8494,
        1986, 351, 31, 1,
    ),
    10: (
        1, 35, 465, 3156, 15018, 53735, 160560, 410651, 905126, 1823644, 3440736, 6052617,
        9973305, 15602907, 23281437, 33719508, 46357542, 61168114, 79108275, 98758261,
        119860063, 141245583, 162653469, 183178248, 200648380, 214964837, 224414283, 230145644,
        230145644, 224414283, 214964837, 200648380, 183178248, 162653469, 141245583, 119860063,
        98758261, 79108275, 61168114, 46357542, 33719508, 23281437, 15602907, 9973305, 6052617,
        3440736, 1823644, 905126, 410651, 160560, 53735, 15018, 3156,
    ),
}

# L_{2,1} over W(D_n), n = 4..10
TABLE_D = {
    4: (1, 14, 16, 50, 30, 50, 16, 14, 1),
    5: (1, 18, 48, 194, 199, 364, 272, 364, 199, 194, 48, 18, 1),
    6: (
        1, 22, 112, 422, 671, 1272, 2009, 2474, 2967, 3140, 2967, 2474, 2009, 1272, 671, 422,
        112, 22, 1,
    ),
    7: (
        1, 26, 194, 696, 2037, 4108, 10196, 12638, 21879, 24296, 33354, 31964, 39782, 31964,
        33354, 24296, 21879, 12638, 10196, 4108, 2037, 696, 194, 26, 1,
    ),
    8: (
        1, 30, 288, 1242, 5163, 10940, 30960, 45108, 90290, 118020, 205208, 229324, 346165,
        348750, 463064, 426234, 519386, 426234, 463064, 348750, 346165, 229324, 205208, 118020,
        90290, 45108, 30960, 10940, 5163, 1242, 288, 30, 1,
    ),
    9: (
        1, 34, 398, 2170, 9911, 24948, 73892, 148792, 319795, 534758, 1034454, 1384762, 2224944,
        2752614, 3901050, 4403418, 5755692, 5942246, 7148158, 6924658, 7723890, 6924658,
        7148158, 5942246, 5755692, 4403418, 3901050, 2752614, 2224944, 1384762, 1034454, 534758,
        319795, 148792, 73892, 24948, 9911, 2170, 398, 34, 1,
    ),
    10: (
        1, 38, 524, 3506, 16891, 56632, 177492, 444948, 969675, 1921582, 3722137, 6004440,
        9881508, 14576416, 21446815, 29859470, 39762140, 51028466, 63595343, 76383568, 89380382,
        101536232, 111199760, 119505284, 124333732, 126331636, 124333732, 119505284, 111199760,
        101536232, 89380382, 76383568, 63595343, 51028466, 39762140, 29859470, 21446815,
        14576416, 9881508, 6004440, 3722137, 1921582, 969675, 444948, 177492, 56632, 16891,
        3506, 524, 38, 1,
    ),
}

# red entries per column, as (table, n) -> degrees
MARKED = {
    ("FIGURE1", 3): (2,),
    ("FIGURE1", 11): (18,),
    ("TABLE_B", 3): (3,),
    ("TABLE_B", 4): (5,),
    ("TABLE_D", 4): (4,),
    ("TABLE_D", 5): (6,),
    ("TABLE_D", 7): (11, 13),
    ("TABLE_D", 8): (15, 17),
    ("TABLE_D", 9): (19, 21),
}
