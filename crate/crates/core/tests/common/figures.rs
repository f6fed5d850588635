/// One drawn tree: root label and, for each child, its label and its five children's labels.
pub struct FigureTree {
    pub root: Label,
    pub children: [(Label, [Label; 5]); 5],
}

/// `(a, b, c1, c2)` for a node drawn as "(a,b,c1/c2)".
pub type Label = (i128, i128, i128, i128);

// Node labels (a, b, c1, c2) as drawn in the two forest figures, grouped
// root -> children -> grandchildren in drawing order.
pub const FIGURES: [FigureTree; 2] = [
    FigureTree {
        root: (13, 15, 8, 7),
        children: [
            (
                (49, 55, 16, 39),
                [
                    (109, 119, 24, 95),
                    (577, 665, 297, 368),
                    (673, 777, 377, 400),
                    (439, 504, 299, 205),
                    (247, 280, 187, 93),
                ],
            ),
            (
                (133, 153, 65, 88),
                [
                    (403, 448, 115, 333),
                    (1459, 1680, 731, 949),
                    (1849, 2135, 1056, 1079),
                    (1321, 1519, 880, 639),
                    (541, 609, 425, 184),
                ],
            ),
            (
                (181, 209, 105, 104),
                [
                    (643, 720, 203, 517),
                    (1891, 2176, 931, 1245),
                    (2521, 2911, 1456, 1455),
                    (1897, 2183, 1248, 935),
                    (637, 713, 513, 200),
                ],
            ),
            (
                (139, 160, 91, 69),
                [
                    (559, 629, 189, 440),
                    (1387, 1595, 672, 923),
                    (1933, 2232, 1127, 1105),
                    (1519, 1749, 989, 760),
                    (427, 475, 352, 123),
                ],
            ),
            (
                (43, 48, 35, 13),
                [
                    (223, 253, 85, 168),
                    (379, 435, 176, 259),
                    (589, 680, 351, 329),
                    (511, 589, 325, 264),
                    (91, 99, 80, 19),
                ],
            ),
        ],
    },
    FigureTree {
        root: (7, 8, 3, 5),
        children: [
            (
                (19, 21, 5, 16),
                [
                    (37, 40, 7, 33),
                    (229, 264, 119, 145),
                    (259, 299, 144, 155),
                    (163, 187, 112, 75),
                    (103, 117, 77, 40),
                ],
            ),
            (
                (79, 91, 40, 51),
                [
                    (247, 275, 72, 203),
                    (859, 989, 429, 560),
                    (1099, 1269, 629, 640),
                    (793, 912, 527, 385),
                    (313, 352, 247, 105),
                ],
            ),
            (
                (97, 112, 55, 57),
                [
                    (337, 377, 105, 272),
                    (1021, 1175, 504, 671),
                    (1351, 1560, 779, 781),
                    (1009, 1161, 665, 496),
                    (349, 391, 280, 111),
                ],
            ),
            (
                (67, 77, 45, 32),
                [
                    (277, 312, 95, 217),
                    (661, 760, 319, 441),
                    (931, 1075, 544, 531),
                    (739, 851, 480, 371),
                    (199, 221, 165, 56),
                ],
            ),
            (
                (31, 35, 24, 11),
                [
                    (151, 171, 56, 115),
                    (283, 325, 133, 192),
                    (427, 493, 253, 240),
                    (361, 416, 231, 185),
                    (73, 80, 63, 17),
                ],
            ),
        ],
    },
];
