//! Independent copy of every glyph row, with members in their original
//! (non-canonical) order, used to check the embedded data file.

/// (table id, key, [(value, members)])
pub type Table = (u32, &'static str, &'static [(u32, &'static str)]);

pub const PRINTED: &[Table] = &[
    (
        0,
        "bengali",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "a1, a2, b, c, d2, d1, e, g1, l"),
            (2, "a1, a2, b, d2, d1, e, g1, g2"),
            (3, "a2, b, c, d2, d1, e, f, i, g2"),
            (4, "a1, a2, b, c, d2, d1, e, f, g1, g2"),
            (5, "a1, c, d2, d1, e, f, i, g2"),
            (6, "i, g2, c, d2, d1, e, f"),
            (7, "a1, a2, b, c, f, g1, g2"),
            (8, "d1, e, f, g1, l, j"),
            (9, "a1, a2, b, c, d2, e, g1, l"),
        ],
    ),
    (
        1,
        "dogri",
        &[
            (0, "a1, f, i, g1"),
            (1, "a1, e, f, i, l"),
            (2, "a1, d1, g1, i, l"),
            (3, "a1, d1, p, g1, i, l"),
            (4, "d1, h, j, l, m"),
            (5, "f, i, g1, l"),
            (6, "a1, h, i, l, g1"),
            (7, "a2, b, c, i, g2"),
            (8, "a1, f, g1, l, d1"),
            (9, "a1, a2, d1, e, f, g1, l"),
        ],
    ),
    (
        2,
        "gujarati",
        &[
            (0, "a1, a2, b, c, d1, d2, e, f"),
            (1, "a1, p, f, g1, i, l"),
            (2, "a2, b, g2, k"),
            (3, "a1, a2, b, c, d2, d1, g2"),
            (4, "d1, h, j, l, m"),
            (5, "a1, b, c, i, g2"),
            (6, "a1, a2, d1, e, f, g1, g2, p"),
            (7, "a2, b, c, d2, d1, e, f, i"),
            (8, "d2, d1, j, m"),
            (9, "d2, d1, e, f, j, m"),
        ],
    ),
    (
        3,
        "devanagari",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "a1, p, d1, f, g1, i, m"),
            (2, "a1, p, d1, i, l"),
            (3, "a1, p, d1, g1, i, l"),
            (4, "d1, h, j, l, m"),
            (5, "p, d1, e, f, l"),
            (6, "a1, p, d1, e, f, g1"),
            (7, "a2, b, c, d2, d1, e, f, i, g2"),
            (8, "d2, d1, j, m"),
            (9, "a2, b, d2, i, g2, k"),
        ],
    ),
    (
        4,
        "kannada",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "a1, a2, b, c, d1, e, f"),
            (2, "a2, b, c, d2, d1, i, j"),
            (3, "a1, p, d1, i, m"),
            (4, "a1, d1, h, j, l, m"),
            (5, "a1, b, d1, i, j, g2, k, l, m"),
            (6, "d2, d1, e, f, g1"),
            (7, "a2, b, d2, d1, g2, m"),
            (8, "a2, d1, e, f, i, l"),
            (9, "a1, a2, d1, e, f, g1"),
        ],
    ),
    (
        5,
        "kashmiri",
        &[
            (0, "a1, f, i, g1"),
            (1, "e, f"),
            (2, "e, f, g1, i"),
            (3, "e, f, g1, g2, i, b"),
            (4, "a1, d1, h, m"),
            (5, "d2, d1, e, f, h, k"),
            (6, "b, c, i, g2"),
            (7, "b, c, h, k"),
            (8, "b, c, j, m"),
            (9, "a2, b, c, i, g2"),
        ],
    ),
    (
        6,
        "maithili",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "a1, a2, b, c, d2, d1, e, g1, l"),
            (2, "a1, a2, b, d1, d2, e, g1, g2"),
            (3, "a2, b, c, d2, g2, p"),
            (4, "d1, h, j, l, m"),
            (5, "a1, a2, c, d2, d1, e, i, g2"),
            (6, "c, d2, d1, e, f, i, g2"),
            (7, "a2, b, c, i"),
            (8, "i, g2, d1, l, m"),
            (9, "b, c, d2, e, g1, l"),
        ],
    ),
    (
        7,
        "malayalam",
        &[
            (0, "a1, a2, d1, e, f, g1, l"),
            (1, "a2, b, d1, i, g2, m"),
            (2, "d2, e, g1, l"),
            (3, "c, e, g1, g2, l"),
            (4, "a2, b, c, d2, e, g1, g2, l"),
            (5, "a1, a2, b, d1, e, f, h, i, g1, l"),
            (6, "a1, a2, b, c, e, f, i, l"),
            (7, "a1, a2, b, d1, e, f, l, m"),
            (8, "b, c, d2, e, g1, l, p"),
            (9, "a2, b, c, d2, e, f, g1, g2, l"),
        ],
    ),
    (
        8,
        "manipuri",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "a1, a2, d1, f, g1, l"),
            (2, "a1, a2, d1, f, g1, l, m"),
            (3, "a1, a2, c, d1, f, g1, g2, k, l, m"),
            (4, "a1, d2, d1, e, g1, i"),
            (5, "a1, a2, f, g1, l"),
            (6, "a1, a2, f, d2, g1, l"),
            (7, "a1, b, d1, i, j, g2, k, l, m"),
            (8, "a1, a2, b, d1, f, g1, l"),
            (9, "a1, a2, b, d1, f, g1, k, l, m"),
        ],
    ),
    (
        9,
        "oriya",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "a1, d1, e, f, g1, i"),
            (2, "a2, b, c, d2, i, g2"),
            (3, "a1, a2, b, c, f, i, l, g1"),
            (4, "h, j, k, m, d2, d1"),
            (5, "a2, d1, i, j, l, m, g1, g2"),
            (6, "a2, b, c, d2, d1, h, i"),
            (7, "a1, a2, b, c, d2, i, j"),
            (8, "a1, e, f"),
            (9, "d2, d1, e, f, h, i"),
        ],
    ),
    (
        10,
        "punjabi",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "a1, p, f, i, g1, l"),
            (2, "a1, p, d1, i, l"),
            (3, "a1, p, d1, i, g1, l"),
            (4, "h, j, d1, l, m"),
            (5, "f, i, l, g1"),
            (6, "a1, a2, d1, e, f, g1"),
            (7, "a2, b, c, d2, d1, i"),
            (8, "a1, d2, d1, e, f"),
            (9, "a1, d2, d1, e, f, h"),
        ],
    ),
    (
        11,
        "santali",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "d2, d1, e, f, h, i"),
            (2, "a1, d2, d1, e, h, i, g1"),
            (3, "d2, d1, f, g1, h, i, m"),
            (4, "a1, d1, e, f, g1, l"),
            (5, "d2, d1, e, f, j, k"),
            (6, "a1, d2, d1, e, f, h, i"),
            (7, "a1, d2, d1, e, i, g1"),
            (8, "b, d2, d1, f, h, j, g2, m"),
            (9, "a1, c, d2, d1, e, f, g2"),
        ],
    ),
    (
        12,
        "sindhi",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "a1, p, f, i, l, g1"),
            (2, "a2, b, g2, k"),
            (3, "a2, b, c, d2, g2"),
            (4, "d1, h, j, l, m"),
            (5, "p, f, i, g1, l"),
            (6, "a1, d1, g1, e, f"),
            (7, "a2, b, c, g2, i, d2, d1, e, f"),
            (8, "d2, d1, j, m"),
            (9, "d2, d1, e, f, j, m"),
        ],
    ),
    (
        13,
        "tamil",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "a1, a2, c, e, f, g1, g2, i, m"),
            (2, "a1, d2, d1, e, f, i, g1"),
            (3, "a1, a2, c, d2, p, e, f, i, g2"),
            (4, "a1, a2, b, d1, e, f, i, l, g1, g2"),
            (5, "a1, a2, c, e, f, d2, d1, i, l, g2"),
            (6, "a1, a2, c, e, f, i, l, m, g1, g2"),
            (7, "a1, a2, b, c, d1, e, f, l, g1"),
            (8, "a1, b, c, d1, e, h, i, l, g1, g2"),
            (9, "a1, a2, c, d1, e, f, i, k, l, g1, g2"),
            (10, "b, c, d2, d1, e, f, i, l"),
            (100, "a1, a2, b, c, e, f, i, l"),
            (1000, "a1, a2, c, d2, p, e, f, i, g1, g2, m"),
        ],
    ),
    (
        14,
        "telugu",
        &[
            (0, "a1, a2, b, c, d2, d1, e, f"),
            (1, "a1, a2, b, c, d1, e, f"),
            (2, "a2, b, c, d2, d1, i, g2"),
            (3, "a2, b, c, d2, g2"),
            (4, "b, d2, d1, f, g1, g2, k, m"),
            (5, "a2, c, h, i, j, m, g2"),
            (6, "a1, d2, d1, e, f, g1"),
            (7, "a1, a2, b, d2, d1, e, g1, g2"),
            (8, "a2, d1, e, f, i, l"),
            (9, "a1, a2, d1, e, f, g1"),
        ],
    ),
    (
        15,
        "urdu",
        &[
            (0, "a1, i, g1, f"),
            (1, "e, f"),
            (2, "e, f, g1, i"),
            (3, "b, e, f, g1, g2, i"),
            (4, "a1, a2, b, e, f, i"),
            (5, "d2, d1, e, f, h, k, m"),
            (6, "b, c, i, g2"),
            (7, "d2, d1, j, m"),
            (8, "b, c, j, m"),
            (9, "a1, f, i, l, g1"),
        ],
    ),
    (
        16,
        "english",
        &[
            (0, "a2, b, c, d2, i, l"),
            (1, "b, c"),
            (2, "a2, b, d2, g2, l"),
            (3, "a2, b, c, d2, g2"),
            (4, "b, c, i, g2"),
            (5, "a2, c, d2, i, g2"),
            (6, "a2, c, d2, i, g2, l"),
            (7, "a2, b, c"),
            (8, "a2, b, c, d2, i, g2, l"),
            (9, "a2, b, c, i, g2"),
        ],
    ),
];
