"""Embedded reference data for the five-qubit proof catalogue.

This module holds the constants everything else is verified against: the
five commuting operator sets, the magic configuration built from them, the
160-ray table the sets generate (as sign strings), the shipped 21-basis
proof, the span table of each set's 31 operator products, and frozen
regression values (counts, hashes, golden search results).

The ray and span tables are data, not derivations: the builders in
:mod:`bks5.rays` and :mod:`bks5.geometry` recompute everything from the
operator sets and raise if the result ever disagrees with what is stored
here.
"""

N_QUBITS = 5
DIM = 32

# The five pairwise-commuting sets; qubit 1 is the leftmost factor.
FIVE_SETS = {
    "A": ("XZXII", "IXZXI", "IIXZX", "XIIXZ", "ZXIIX"),
    "B": ("ZIIII", "IZIII", "IIZII", "IIIZI", "IIIIZ"),
    "A'": ("XZXII", "IIXZX", "IZIII", "IIIZI", "IIIIX"),
    "B'": ("IXZXI", "XIIXZ", "IIZII", "IIIIZ", "IXIII"),
    "C": ("ZXIIX", "ZIIII", "IXIII", "IIIZI", "IIXZX"),
}

# Magic configuration: five commuting sets, each with a designated
# product operator.  Every operator occurs in exactly two entries and
# the product signs multiply to -1.
MAGIC_SETS = (
    ("set1", ("XZXII", "IXZXI", "IIXZX", "XIIXZ", "ZXIIX"), "ZZZZZ"),
    ("set2", ("ZIIII", "IZIII", "IIZII", "IIIZI", "IIIIZ"), "ZZZZZ"),
    ("set3", ("XZXII", "IIXZX", "IZIII", "IIIZI", "IIIIX"), "XIIII"),
    ("set4", ("IXZXI", "XIIXZ", "IIZII", "IIIIZ", "IXIII"), "XIIII"),
    ("set5", ("ZXIIX", "ZIIII", "IXIII"), "IIIIX"),
)

BLOCK_ORDER = ("B", "A", "A'", "B'", "C")

# 1-based inclusive id ranges of the five 32-ray blocks.
BLOCK_RANGES = {
    "B": (1, 32),
    "A": (33, 64),
    "A'": (65, 96),
    "B'": (97, 128),
    "C": (129, 160),
}

# Partner ids follow k -> k+16 within each half block, with one
# exception in block C where the catalogue order swaps 154 and 155;
# ids 1-32 reverse (partner of ray k is ray 33-k).
PARTNER_EXCEPTIONS = {138: 155, 139: 154, 154: 139, 155: 138}

# The 160 rays as strings over {+, -, 0}; index i holds ray id i+1.
RAYS = (
    "+0000000000000000000000000000000",
    "0+000000000000000000000000000000",
    "00+00000000000000000000000000000",
    "000+0000000000000000000000000000",
    "0000+000000000000000000000000000",
    "00000+00000000000000000000000000",
    "000000+0000000000000000000000000",
    "0000000+000000000000000000000000",
    "00000000+00000000000000000000000",
    "000000000+0000000000000000000000",
    "0000000000+000000000000000000000",
    "00000000000+00000000000000000000",
    "000000000000+0000000000000000000",
    "0000000000000+000000000000000000",
    "00000000000000+00000000000000000",
    "000000000000000+0000000000000000",
    "0000000000000000+000000000000000",
    "00000000000000000+00000000000000",
    "000000000000000000+0000000000000",
    "0000000000000000000+000000000000",
    "00000000000000000000+00000000000",
    "000000000000000000000+0000000000",
    "0000000000000000000000+000000000",
    "00000000000000000000000+00000000",
    "000000000000000000000000+0000000",
    "0000000000000000000000000+000000",
    "00000000000000000000000000+00000",
    "000000000000000000000000000+0000",
    "0000000000000000000000000000+000",
    "00000000000000000000000000000+00",
    "000000000000000000000000000000+0",
    "0000000000000000000000000000000+",
    "+00+0-+00++0-00+0-+0+00++00-0--0",
    "+00-0--00-+0+00+0--0+00--00-0+-0",
    "0++0-00++00+0-+0+00-0--00-+0+00+",
    "0++0+00-+00+0+-0+00-0++00-+0-00-",
    "+00-0++00+-0+00+0--0-00++00+0+-0",
    "0++0-00+-00-0+-0-00+0++00-+0+00+",
    "0+-0-00-+00-0--0+00+0-+00--0+00-",
    "+00-0++00-+0-00-0--0-00+-00-0-+0",
    "+00-0--00-+0+00+0++0-00++00+0-+0",
    "+00+0-+00++0-00+0+-0-00--00+0++0",
    "+00-0++00+-0+00+0++0+00--00-0-+0",
    "0++0-00++00+0-+0-00+0++00+-0-00-",
    "+00+0+-00++0+00-0+-0+00+-00+0--0",
    "0+-0+00+-00+0--0-00-0-+00--0-00+",
    "+00+0-+00--0+00-0-+0+00+-00+0++0",
    "+00-0--00+-0-00-0++0-00+-00-0+-0",
    "0++0+00--00-0-+0-00+0--00-+0-00-",
    "0+-0+00++00-0++0-00-0-+00++0+00-",
    "+00+0+-00--0-00+0+-0+00++00-0++0",
    "+00+0-+00--0+00-0+-0-00-+00-0--0",
    "0+-0-00--00+0++0-00-0+-00--0+00-",
    "+00+0+-00++0+00-0-+0-00-+00-0++0",
    "+00-0++00-+0-00-0++0+00-+00+0+-0",
    "0+-0-00-+00-0--0-00-0+-00++0-00+",
    "0+-0+00++00-0++0+00+0+-00--0-00+",
    "0++0+00--00-0-+0+00-0++00+-0+00+",
    "0+-0-00--00+0++0+00+0-+00++0-00+",
    "+00+0+-00--0-00+0-+0-00--00+0--0",
    "0++0-00+-00-0+-0+00-0--00+-0-00-",
    "+00-0--00+-0-00-0--0+00-+00+0-+0",
    "0++0+00-+00+0+-0-00+0--00+-0+00+",
    "0+-0+00+-00+0--0+00+0+-00++0+00-",
    "00++00++0000000000++00++00000000",
    "++00++0000000000++00++0000000000",
    "00000000+-00+-0000000000+-00+-00",
    "00+-00+-0000000000-+00-+00000000",
    "0000000000++00--0000000000++00--",
    "00++00--0000000000++00--00000000",
    "00000000++00--0000000000--00++00",
    "++00--0000000000--00++0000000000",
    "0000000000+-00+-0000000000-+00-+",
    "00000000++00++0000000000--00--00",
    "++00++0000000000--00--0000000000",
    "00000000+-00-+0000000000-+00+-00",
    "00000000+-00-+0000000000+-00-+00",
    "+-00+-0000000000+-00+-0000000000",
    "+-00-+0000000000+-00-+0000000000",
    "0000000000+-00-+0000000000-+00+-",
    "00000000++00++0000000000++00++00",
    "0000000000++00++0000000000++00++",
    "00+-00+-0000000000+-00+-00000000",
    "00000000+-00+-0000000000-+00-+00",
    "++00--0000000000++00--0000000000",
    "00000000++00--0000000000++00--00",
    "00++00--0000000000--00++00000000",
    "0000000000++00--0000000000--00++",
    "+-00+-0000000000-+00-+0000000000",
    "00++00++0000000000--00--00000000",
    "0000000000++00++0000000000--00--",
    "00+-00-+0000000000-+00+-00000000",
    "00+-00-+0000000000+-00-+00000000",
    "0000000000+-00+-0000000000+-00+-",
    "0000000000+-00-+0000000000+-00-+",
    "+-00-+0000000000-+00+-0000000000",
    "+0+00000+0+00000+0+00000+0+00000",
    "0000+0+00000+0+00000+0+00000+0+0",
    "+0+00000-0-00000-0-00000+0+00000",
    "0000+0-00000-0+00000-0+00000+0-0",
    "0000+0-00000+0-00000-0+00000-0+0",
    "+0-00000+0-00000+0-00000+0-00000",
    "00000+0+00000-0-00000+0+00000-0-",
    "0000+0+00000+0+00000-0-00000-0-0",
    "00000+0-00000-0+00000-0+00000+0-",
    "00000+0+00000+0+00000-0-00000-0-",
    "+0-00000+0-00000-0+00000-0+00000",
    "0000+0-00000+0-00000+0-00000+0-0",
    "0000+0+00000-0-00000-0-00000+0+0",
    "00000+0-00000-0+00000+0-00000-0+",
    "0+0-00000-0+00000+0-00000-0+0000",
    "0+0+00000-0-00000+0+00000-0-0000",
    "00000+0+00000+0+00000+0+00000+0+",
    "0+0+00000+0+00000+0+00000+0+0000",
    "00000+0+00000-0-00000-0-00000+0+",
    "0+0-00000-0+00000-0+00000+0-0000",
    "0+0-00000+0-00000-0+00000-0+0000",
    "00000+0-00000+0-00000+0-00000+0-",
    "+0+00000-0-00000+0+00000-0-00000",
    "0+0+00000+0+00000-0-00000-0-0000",
    "+0-00000-0+00000-0+00000+0-00000",
    "+0+00000+0+00000-0-00000-0-00000",
    "00000+0-00000+0-00000-0+00000-0+",
    "0+0-00000+0-00000+0-00000+0-0000",
    "0+0+00000-0-00000-0-00000+0+0000",
    "+0-00000-0+00000+0-00000-0+00000",
    "0000+0-00000-0+00000+0-00000-0+0",
    "0000+0+00000-0-00000+0+00000-0-0",
    "0000000000000000++00++00++00++00",
    "++00++00++00++000000000000000000",
    "0000000000000000++00++00--00--00",
    "+-00-+00-+00+-000000000000000000",
    "++00++00--00--000000000000000000",
    "000000000000000000+-00+-00-+00-+",
    "000000000000000000+-00-+00+-00-+",
    "00++00--00++00--0000000000000000",
    "0000000000000000+-00+-00+-00+-00",
    "0000000000000000++00--00--00++00",
    "000000000000000000++00--00++00--",
    "000000000000000000++00--00--00++",
    "0000000000000000+-00-+00+-00-+00",
    "00+-00-+00-+00+-0000000000000000",
    "000000000000000000+-00+-00+-00+-",
    "0000000000000000+-00+-00-+00-+00",
    "00++00++00++00++0000000000000000",
    "000000000000000000++00++00++00++",
    "00++00++00--00--0000000000000000",
    "000000000000000000+-00-+00-+00+-",
    "000000000000000000++00++00--00--",
    "+-00+-00-+00-+000000000000000000",
    "+-00-+00+-00-+000000000000000000",
    "0000000000000000++00--00++00--00",
    "00+-00+-00+-00+-0000000000000000",
    "++00--00++00--000000000000000000",
    "00++00--00--00++0000000000000000",
    "++00--00--00++000000000000000000",
    "00+-00-+00+-00-+0000000000000000",
    "0000000000000000+-00-+00-+00+-00",
    "+-00+-00+-00+-000000000000000000",
    "00+-00+-00-+00-+0000000000000000",
)

# The shipped 21-basis proof; each basis lists its 32 ray ids.
PROOF_BASES = {
    1: (65, 66, 67, 71, 72, 74, 75, 78, 80, 81, 82, 84, 85, 86, 89, 90,
        91, 92, 93, 95, 132, 134, 136, 139, 140, 141, 143, 151, 153, 155,
        158, 160),
    2: (67, 69, 70, 71, 72, 76, 77, 78, 79, 80, 84, 85, 86, 87, 88, 89,
        92, 93, 95, 96, 129, 130, 131, 133, 134, 143, 145, 146, 147, 149,
        153, 160),
    3: (36, 37, 40, 43, 45, 46, 49, 50, 51, 54, 55, 57, 58, 60, 63, 64,
        80, 92, 93, 95, 137, 138, 144, 145, 146, 147, 149, 150, 152, 154,
        156, 159),
    4: (2, 4, 5, 7, 10, 12, 13, 15, 18, 20, 21, 23, 26, 28, 29, 31, 97,
        99, 102, 103, 105, 106, 107, 110, 113, 115, 118, 119, 121, 122,
        123, 126),
    5: (33, 34, 38, 44, 47, 53, 56, 62, 66, 67, 68, 71, 73, 74, 75, 80,
        81, 82, 83, 85, 89, 90, 93, 94, 132, 136, 139, 140, 141, 151, 155,
        158),
    6: (66, 68, 69, 70, 71, 72, 73, 74, 75, 80, 81, 83, 85, 86, 87, 88,
        92, 93, 94, 95, 132, 137, 141, 144, 145, 146, 147, 149, 150, 151,
        158, 159),
    7: (65, 66, 67, 69, 70, 77, 78, 79, 81, 82, 83, 85, 86, 93, 94, 95,
        99, 100, 101, 104, 105, 106, 107, 109, 115, 116, 117, 120, 121,
        122, 123, 125),
    8: (36, 37, 43, 45, 50, 54, 57, 63, 67, 78, 84, 89, 129, 133, 134,
        135, 138, 139, 142, 145, 146, 147, 148, 149, 151, 152, 153, 154,
        155, 156, 157, 158),
    9: (34, 38, 41, 47, 52, 53, 59, 61, 68, 69, 70, 73, 76, 77, 79, 83,
        87, 88, 94, 96, 129, 130, 131, 133, 135, 137, 138, 142, 145, 149,
        150, 154),
    10: (2, 3, 5, 8, 9, 12, 14, 15, 17, 20, 22, 23, 26, 27, 29, 32, 33, 34,
        37, 40, 41, 42, 43, 45, 47, 48, 51, 52, 54, 55, 60, 62),
    11: (36, 43, 45, 51, 55, 57, 58, 64, 65, 67, 68, 70, 71, 72, 75, 76,
        78, 79, 80, 81, 82, 84, 85, 86, 88, 89, 90, 91, 92, 93, 94, 95),
    12: (66, 74, 75, 80, 81, 92, 93, 95, 132, 134, 136, 137, 138, 139, 140,
        141, 143, 144, 145, 146, 147, 149, 150, 151, 152, 153, 154, 155,
        156, 158, 159, 160),
    13: (19, 20, 23, 24, 27, 28, 31, 32, 66, 67, 74, 75, 76, 77, 78, 79,
        81, 84, 89, 96, 136, 138, 142, 145, 147, 152, 153, 154, 155, 156,
        157, 160),
    14: (1, 2, 3, 4, 9, 10, 11, 12, 17, 18, 19, 20, 25, 26, 27, 28, 98,
        100, 101, 103, 104, 105, 106, 108, 109, 110, 113, 115, 118, 123,
        127, 128),
    15: (1, 2, 5, 6, 17, 18, 21, 22, 65, 67, 69, 70, 71, 74, 76, 77, 81,
        82, 84, 86, 87, 88, 90, 91, 134, 135, 142, 143, 148, 153, 157, 160),
    16: (99, 100, 103, 105, 109, 110, 111, 112, 115, 116, 119, 121, 125,
        126, 127, 128, 129, 130, 135, 136, 137, 139, 141, 143, 145, 146,
        151, 152, 153, 154, 157, 159),
    17: (11, 12, 15, 16, 17, 18, 21, 22, 25, 26, 27, 28, 29, 30, 31, 32,
        65, 68, 70, 83, 87, 90, 92, 93, 130, 132, 133, 150, 151, 154, 156,
        159),
    18: (33, 35, 36, 37, 38, 39, 41, 46, 49, 51, 52, 53, 54, 55, 57, 62,
        98, 100, 103, 106, 107, 108, 109, 110, 114, 116, 119, 122, 123,
        124, 125, 126),
    19: (67, 69, 70, 71, 72, 78, 80, 84, 85, 86, 87, 88, 89, 92, 93, 95,
        129, 130, 131, 132, 133, 134, 141, 143, 145, 146, 147, 149, 151,
        153, 158, 160),
    20: (33, 35, 36, 37, 39, 40, 42, 43, 44, 45, 46, 48, 49, 50, 51, 54,
        55, 56, 57, 58, 60, 62, 63, 64, 144, 146, 147, 148, 152, 156, 157,
        159),
    21: (1, 3, 6, 8, 9, 11, 14, 16, 17, 19, 22, 24, 25, 27, 30, 32, 98,
        100, 101, 104, 108, 109, 111, 112, 114, 116, 117, 120, 124, 125,
        127, 128),
}

# The unique 5-subset of the proof bases partitioning the 160 rays.
PARTITION_BASES = (1, 4, 9, 20, 21)

# 31 operator strings spanned by each set (products of its members).
SPAN_TABLE = {
    "A": (
        "XZXII", "IXZXI", "IIXZX", "XIIXZ", "ZXIIX", "XYYXI", "XZIZX",
        "IZXXZ", "YYXIX", "IXYYX", "XXZIZ", "ZIZXX", "XIXYY", "ZXXZI",
        "YXIXY", "XYZYX", "IYYIZ", "YZYXX", "IZIYY", "YYIZI", "ZYXXY",
        "XXYZY", "ZIYYI", "YIZIY", "YXXYZ", "IYZZY", "YZZYI", "ZZYIY",
        "ZYIYZ", "YIYZZ", "ZZZZZ",
    ),
    "B": (
        "IZIII", "IIZII", "IIIZI", "IIIIZ", "ZIIII", "IZZII", "IZIZI",
        "IZIIZ", "ZZIII", "IIZZI", "IIZIZ", "ZIZII", "IIIZZ", "ZIIZI",
        "ZIIIZ", "IZZZI", "IZZIZ", "ZZZII", "IZIZZ", "ZZIZI", "ZZIIZ",
        "IIZZZ", "ZIZZI", "ZIZIZ", "ZIIZZ", "IZZZZ", "ZZZZI", "ZZZIZ",
        "ZZIZZ", "ZIZZZ", "ZZZZZ",
    ),
    "A\'": (
        "IZIII", "IIIZI", "XZXII", "IIXZX", "IIIIX", "IZIZI", "XIXII",
        "IZXZX", "IZIIX", "XZXZI", "IIXIX", "IIIZX", "XZIZX", "XZXIX",
        "IIXZI", "XIXZI", "IZXIX", "IZIZX", "XIIZX", "XIXIX", "IZXZI",
        "XZIIX", "XZXZX", "IIXII", "XZIZI", "XIIIX", "XIXZX", "IZXII",
        "XIIZI", "XZIII", "XIIII",
    ),
    "B\'": (
        "IIZII", "IIIIZ", "XIIXZ", "IXZXI", "IXIII", "IIZIZ", "XIZXZ",
        "IXIXI", "IXZII", "XIIXI", "IXZXZ", "IXIIZ", "XXZIZ", "XXIXZ",
        "IIZXI", "XIZXI", "IXIXZ", "IXZIZ", "XXIIZ", "XXZXZ", "IIIXI",
        "XXZII", "XXIXI", "IIZXZ", "XIZIZ", "XXIII", "XXZXI", "IIIXZ",
        "XIIIZ", "XIZII", "XIIII",
    ),
    "C": (
        "IXIII", "IIIZI", "ZIIII", "ZXIIX", "IIXZX", "IXIZI", "ZXIII",
        "ZIIIX", "IXXZX", "ZIIZI", "ZXIZX", "IIXIX", "IXIIX", "ZIXZX",
        "ZXXZI", "ZXIZI", "ZIIZX", "IXXIX", "IIIIX", "ZXXZX", "ZIXZI",
        "IXIZX", "ZIXIX", "ZXXII", "IXXZI", "IIIZX", "ZXXIX", "ZIXII",
        "IIXZI", "IXXII", "IIXII",
    ),
}

# Projective dimensions of pairwise span intersections (-1 = empty).
INTERSECTION_DIMS = {
    ("A", "B"): 0,
    ("A", "A\'"): 1,
    ("A", "B\'"): 1,
    ("A", "C"): 1,
    ("B", "A\'"): 1,
    ("B", "B\'"): 1,
    ("B", "C"): 1,
    ("A\'", "B\'"): 0,
    ("A\'", "C"): 2,
    ("B\'", "C"): 0,
}

# Operators appearing in an unusual number of the five sets; all three
# lie in the 7-point plane shared by the A' and C spans.
DISTINGUISHED = {"IIIZI": 3, "IIXZX": 3, "IIIIX": 1}

# Frozen regression constants for the full 160-ray orthogonality graph.
BASIS_COUNT = 661
BASES_SHA256 = "a35a8f92f6bcfeee3ad5c86e3d09df2e6ed8994729ecf8a5e126015a8117c998"
PARTITION_COUNT = 10328
ORTHO_PAIR_COUNT = 9520

# Distinct distance values, counting the zero distance of every basis
# to itself alongside the distinct positive pair values.
DISTINCT_DISTANCES_PROOF = 54
DISTINCT_DISTANCES_ALL = 77
# Highest-multiplicity squared distances in the proof spectrum.
PEAKS = ((29, 31), (43, 62))

# Overlap-graph symmetry of the 21-basis proof.
AUT_ORDER = 192
AUT_NORMAL_EA_ORDER = 32
AUT_QUOTIENT_ORDER = 6

# Golden result of the pinned-seed randomized search (seed 0,
# max_size 30, budget 64), recorded at its first successful run.
SEARCH_GOLDEN = {"restart": 0, "size": 5, "bases": [68, 73, 262, 286, 317]}
