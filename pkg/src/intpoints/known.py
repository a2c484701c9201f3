"""Reference curves with their integral multiples of (0, 0), nmax = 35.

Each entry is ``((a, b, c, d, e), multiples)``.  The first list is ordered by
highest integral multiple, the second by number of integral multiples.
"""

HIGHEST_MULTIPLE_TABLE = [
    ((-17, -30, 960, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14, 15, 17, 31)),
    ((7, 70, -210, 0, 0), (1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 14, 15, 18, 25)),
    ((-28, -420, -840, 0, 0), (1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 24)),
    ((535, 22770, 10929600, 0, 0), (1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 15, 23, 24)),
    ((1879, -155400, -300699000, 0, 0), (1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 22)),
    ((-80, 480, -34560, 0, 0), (1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 21)),
    ((-77, -2640, -7920, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 13, 14, 15, 16, 18, 21)),
    ((1107, 104940, 102316500, 0, 0), (1, 2, 3, 4, 6, 7, 8, 9, 12, 21)),
    ((-181, 2730, -436800, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 21)),
    ((253, 5320, 1197000, 0, 0), (1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 14, 15, 18, 19, 20, 21)),
    ((211, 6630, 537030, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 15, 16, 21)),
    ((-3599, -4149288, -116180064, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 21)),
    ((11, 210, 1050, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 17, 21)),
    ((-2813, 19399380, -2968105140, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 21)),
    ((479, 43860, 12061500, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 21)),
    ((1543, 191520, 262765440, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 21)),
    ((99, -30618, 1928934, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14, 15, 20)),
    ((-3, -672, -12096, 0, 0), (1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 20)),
    ((-133, 546, -49686, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 15, 16, 19, 20)),
    ((-3659, -27422550, -51856042050, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 20)),
    ((-133, -7038, -35190, 0, 0), (1, 2, 3, 4, 5, 6, 9, 10, 11, 15, 20)),
    ((2921, -112530, -98463750, 0, 0), (1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 14, 20)),
    ((-3141, 614790, -1765062090, 0, 0), (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 18, 20)),
    ((-65, -1518, -1518, 0, 0), (1, 2, 3, 4, 5, 6, 9, 10, 12, 15, 18, 20)),
    ((707, 49910, 27550320, 0, 0), (1, 2, 3, 4, 5, 7, 8, 10, 20)),
    ((718, -115830, -347490, 0, 0), (1, 2, 3, 4, 5, 8, 9, 10, 11, 20)),
    ((123, 532, 50540, 0, 0), (1, 2, 3, 4, 5, 7, 8, 10, 20)),
    ((-151, -13200, -184800, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 20)),
    ((5273, 2920050, 12331371150, 0, 0), (1, 2, 3, 4, 5, 7, 8, 10, 20)),
    ((341, 9240, 2827440, 0, 0), (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 20)),
    ((103, 330, 26730, 0, 0), (1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 13, 15, 20)),
    ((-157, -1170, 288990, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 14, 17, 20)),
    ((-5, -6, 48, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 11, 19)),
    ((-396, 10368, -3732480, 0, 0), (1, 2, 3, 4, 5, 6, 8, 9, 10, 19)),
    ((35, 330, 1650, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 19)),
    ((3739, 456960, -777288960, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 11, 19)),
    ((213, -20790, -5738040, 0, 0), (1, 2, 3, 4, 6, 8, 9, 18)),
    ((1981, -1002540, -121307340, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 18)),
    ((161, 9240, -36960, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 18)),
    ((-24, 1464372, -1634239152, 0, 0), (1, 2, 3, 6, 9, 18)),
]

MOST_MULTIPLES_TABLE = [
    ((253, 5320, 1197000, 0, 0), (1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 14, 15, 18, 19, 20, 21)),
    ((-77, -2640, -7920, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 13, 14, 15, 16, 18, 21)),
    ((-17, -30, 960, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14, 15, 17, 31)),
    ((11, 210, 1050, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 17, 21)),
    ((211, 6630, 537030, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 15, 16, 21)),
    ((1087, -294840, -2063880, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 18)),
    ((7, 70, -210, 0, 0), (1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 14, 15, 18, 25)),
    ((-209, 23520, -2446080, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 18)),
    ((-133, 546, -49686, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 15, 16, 19, 20)),
    ((-157, -1170, 288990, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 14, 17, 20)),
    ((863, 61560, 47278080, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 14, 15, 16)),
    ((1601, -64260, -72292500, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16)),
    ((-181, 2730, -436800, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 21)),
    ((-41, 5460, -2211300, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16)),
    ((73, 440, 28600, 0, 0), (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 17, 18)),
    ((-359, -6270, 2664750, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15)),
    ((99, -30618, 1928934, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14, 15, 20)),
    ((-103, -32760, -2522520, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15)),
    ((-821, 510510, -2111469360, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 14, 15, 16)),
    ((535, 22770, 10929600, 0, 0), (1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 15, 23, 24)),
    ((-3823, -18102150, -20401123050, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15)),
    ((43, 30360, -2337720, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15)),
    ((703, 166530, -34471710, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16)),
    ((1583, 211140, 296229420, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 14, 15)),
    ((-1525, -6468930, -6727687200, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 13, 14, 15)),
    ((53, 4620, -32340, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15)),
    ((-211, 27930, -9077250, 0, 0), (1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 14, 15)),
    ((323790750569, -198500546018619925080, -64392933999375238312586416005120, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15)),
    ((91, -4395600, -7362630000, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 14, 15)),
    ((38576, 187514880, 6225494016000, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15)),
    ((3193, 703560, 1880615880, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15)),
    ((-6525, -22781250, 199905468750, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14, 17)),
    ((-156, 1920, -268800, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 14, 15)),
    ((116, -26880, -5376000, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16)),
    ((-3141, 614790, -1765062090, 0, 0), (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 18, 20)),
    ((-53, 210, -10080, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 13, 14, 15)),
    ((103, 330, 26730, 0, 0), (1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 13, 15, 20)),
    ((-653, 58590, -1347570, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15)),
    ((93160101824, 38102459540853227520, 3534126808484560635939394682880, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15)),
    ((311, -101010, -42020160, 0, 0), (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15)),
]

