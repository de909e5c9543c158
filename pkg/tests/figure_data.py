"""Golden edge lists for the relation graphs at degrees up to 5,
transcribed by hand from the published diagrams.

Each edge is (source, target, label) in composition text form.  The
split-relation figure labels edges 1/2/3 for the three arrow moves; the
monomial-relation figure labels edges 1/2 for the two triangle moves
and additionally marks the (1,...,1,2) vertices.
"""

# splits and swaps: arrow1 / arrow2 / arrow3
FIGURE1_EDGES = {
    0: [],
    1: [],
    2: [("(2)", "(1,1)", "2")],
    3: [
        ("(3)", "(1,2)", "1"),
        ("(1,2)", "(1,1,1)", "2"),
    ],
    4: [
        ("(4)", "(1,3)", "1"),
        ("(1,3)", "(1,1,2)", "1"),
        ("(1,1,2)", "(1,1,1,1)", "2"),
        ("(2,2)", "(2,1,1)", "2"),
        ("(3,1)", "(1,2,1)", "1"),
        ("(1,2,1)", "(2,1,1)", "3"),
    ],
    5: [
        ("(5)", "(1,4)", "1"),
        ("(1,4)", "(1,1,3)", "1"),
        ("(1,1,3)", "(1,1,1,2)", "1"),
        ("(1,1,1,2)", "(1,1,1,1,1)", "2"),
        ("(2,3)", "(2,1,2)", "1"),
        ("(2,1,2)", "(2,1,1,1)", "2"),
        ("(3,2)", "(1,2,2)", "1"),
        ("(3,2)", "(3,1,1)", "2"),
        ("(1,2,2)", "(1,2,1,1)", "2"),
        ("(3,1,1)", "(1,2,1,1)", "1"),
        ("(4,1)", "(1,3,1)", "1"),
        ("(1,3,1)", "(1,1,2,1)", "1"),
        ("(1,2,1,1)", "(2,1,1,1)", "3"),
        ("(1,1,2,1)", "(1,2,1,1)", "3"),
    ],
}

# triangle moves: tri1 / tri2, plus the marked (1,...,1,2) vertices
FIGURE2_EDGES = {
    0: [],
    1: [],
    2: [],
    3: [("(3)", "(2,1)", "1")],
    4: [
        ("(4)", "(2,2)", "1"),
        ("(2,2)", "(1,1,2)", "2"),
        ("(3,1)", "(2,1,1)", "1"),
        ("(1,3)", "(1,2,1)", "1"),
    ],
    5: [
        ("(5)", "(2,3)", "1"),
        ("(2,3)", "(2,2,1)", "1"),
        ("(4,1)", "(2,2,1)", "1"),
        ("(1,4)", "(1,2,2)", "1"),
        ("(1,2,2)", "(1,1,1,2)", "2"),
        ("(3,2)", "(2,1,2)", "1"),
        ("(2,1,2)", "(1,1,1,2)", "2"),
        ("(3,1,1)", "(2,1,1,1)", "1"),
        ("(1,3,1)", "(1,2,1,1)", "1"),
        ("(1,1,3)", "(1,1,2,1)", "1"),
    ],
}

FIGURE2_CTILDE = {
    0: [],
    1: [],
    2: ["(2)"],
    3: ["(1,2)"],
    4: ["(1,1,2)"],
    5: ["(1,1,1,2)"],
}
