"""Hand-typed tables: graph arrows and matrices, member indices, sporadic pairs.

Arrows are (k, l, ell) meaning a normalized ell-isogeny from member k to member l.
"""

GENUS_ZERO = (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25)
SPORADIC = (11, 14, 15, 17, 19, 21, 27, 37, 43, 67, 163)

K_INDICES = {
    2: (1, 2), 3: (1, 2), 5: (1, 2), 7: (1, 2), 13: (1, 2),
    4: (4, 2), 6: (1, 4), 10: (1, 4), 8: (3, 6), 9: (1, 3), 25: (1, 3),
    12: (5, 4), 16: (2, 8), 18: (1, 6),
}

MEMBER_COUNT = {
    2: 2, 3: 2, 5: 2, 7: 2, 13: 2, 17: 2, 19: 2, 37: 2, 43: 2, 67: 2, 163: 2,
    9: 3, 25: 3,
    4: 4, 6: 4, 10: 4, 11: 4, 14: 4, 15: 4, 21: 4, 27: 4,
    8: 6, 18: 6,
    12: 8, 16: 8,
}


def _arrows(n):
    if n in (2, 3, 5, 7, 13):
        return [(1, 2, n)]
    if n in (9, 25):
        r = {9: 3, 25: 5}[n]
        return [(1, 2, r), (2, 3, r)]
    if n in (6, 10):
        h = n // 2
        return [(1, 2, 2), (1, 3, h), (2, 4, h), (3, 4, 2)]
    if n == 4:
        return [(1, 2, 2), (1, 3, 2), (4, 1, 2)]
    if n == 8:
        return [(1, 2, 2), (3, 1, 2), (1, 4, 2), (4, 5, 2), (4, 6, 2)]
    if n == 12:
        return [(3, 4, 3), (1, 2, 3), (1, 7, 2), (1, 3, 2), (2, 4, 2),
                (5, 1, 2), (5, 6, 3), (6, 2, 2), (7, 8, 3), (8, 2, 2)]
    if n == 16:
        return [(2, 1, 2), (1, 3, 2), (1, 4, 2), (6, 7, 2), (6, 8, 2),
                (4, 5, 2), (4, 6, 2)]
    if n == 18:
        return [(1, 3, 3), (1, 2, 2), (3, 4, 2), (3, 5, 3), (5, 6, 2),
                (2, 4, 3), (4, 6, 3)]
    if n in (11, 17, 19, 37, 43, 67, 163):
        return [(1, 2, n)]
    if n in (14, 15, 21):
        p, q = {14: (2, 7), 15: (3, 5), 21: (3, 7)}[n]
        return [(1, 2, p), (1, 3, q), (2, 4, q), (3, 4, p)]
    if n == 27:
        return [(1, 2, 3), (2, 3, 3), (3, 4, 3)]
    raise KeyError(n)


ARROWS = {n: _arrows(n) for n in GENUS_ZERO + SPORADIC}


def _matrix(n):
    if n in (2, 3, 5, 7, 13, 11, 17, 19, 37, 43, 67, 163):
        return [[1, n], [n, 1]]
    if n in (9, 25):
        r = {9: 3, 25: 5}[n]
        return [[1, r, n], [r, 1, r], [n, r, 1]]
    if n in (6, 10):
        h = n // 2
        return [[1, 2, h, n], [2, 1, n, h], [h, n, 1, 2], [n, h, 2, 1]]
    if n == 4:
        return [[1, 2, 2, 2], [2, 1, 4, 4], [2, 4, 1, 4], [2, 4, 4, 1]]
    if n == 8:
        return [[1, 2, 2, 2, 4, 4],
                [2, 1, 4, 4, 8, 8],
                [2, 4, 1, 4, 8, 8],
                [2, 4, 4, 1, 2, 2],
                [4, 8, 8, 2, 1, 4],
                [4, 8, 8, 2, 4, 1]]
    if n == 12:
        return [[1, 3, 2, 6, 2, 6, 2, 6],
                [3, 1, 6, 2, 6, 2, 6, 2],
                # (3,5) printed as 6; 3-1-5 is a path of two 2-isogenies, so 4
                [2, 6, 1, 3, 4, 12, 4, 12],
                [6, 2, 3, 1, 12, 4, 12, 4],
                [2, 6, 4, 12, 1, 3, 4, 12],
                [6, 2, 12, 4, 3, 1, 12, 4],
                [2, 6, 4, 12, 4, 12, 1, 3],
                [6, 2, 12, 4, 12, 4, 3, 1]]
    if n == 16:
        return [[1, 2, 2, 2, 4, 4, 8, 8],
                [2, 1, 4, 4, 8, 8, 16, 16],
                [2, 4, 1, 4, 8, 8, 16, 16],
                [2, 4, 4, 1, 2, 2, 4, 4],
                [4, 8, 8, 2, 1, 4, 8, 8],
                [4, 8, 8, 2, 4, 1, 2, 2],
                [8, 16, 16, 4, 8, 2, 1, 4],
                [8, 16, 16, 4, 8, 2, 4, 1]]
    if n == 18:
        return [[1, 2, 3, 6, 9, 18],
                [2, 1, 6, 3, 18, 9],
                [3, 6, 1, 2, 3, 6],
                [6, 3, 2, 1, 6, 3],
                [9, 18, 3, 6, 1, 2],
                [18, 9, 6, 3, 2, 1]]
    if n in (14, 15, 21):
        p, q = {14: (2, 7), 15: (3, 5), 21: (3, 7)}[n]
        return [[1, p, q, n], [p, 1, n, q], [q, n, 1, p], [n, q, p, 1]]
    if n == 27:
        return [[1, 3, 9, 27], [3, 1, 3, 9], [9, 3, 1, 3], [27, 9, 3, 1]]
    raise KeyError(n)


MATRICES = {n: _matrix(n) for n in GENUS_ZERO + SPORADIC}

# (A_{n,i}, B_{n,i}) of the sporadic curves, member order 1..4
SPORADIC_PAIRS = {
    11: [(-1149984, -487018224), (-9504, 365904), (-395307, 373960422), (-38907, -2953962)],
    14: [(-2361555, 1396762542), (-138915, 24504606), (-48195, -4072194), (-2835, -71442)],
    15: [(-162675, -25254450), (-675, -79650), (712125, -104861250), (-97875, 14208750)],
    17: [(-247394115, -1679010134850), (-3940515, 3010787550)],
    19: [(-219488, -39617584), (-608, 5776)],
    21: [(-1396035, 634881726), (-1104435, 907504398), (3645, -13122), (-54675, -5156946)],
    27: [(-4320, -109296), (0, -432), (0, 16), (-480, 4048)],
    37: [(-269675595, -1704553285050), (-10395, 444150)],
    43: [(-25442240, -49394836848), (-13760, 621264)],
    67: [(-529342880, -4687634371504), (-117920, 15585808)],
    163: [(-924354639680, -342062961763303088), (-34790720, 78984748304)],
}

# the two classes at level 11 (members 1,2 and 3,4)
SUBCLASSES = {11: [(1, 2), (3, 4)]}

# exceptional parameters: defining polynomial (dense, ascending) and the j value there
SINGULAR_SETS = {
    2: ([64, 1], 1728),
    3: ([27, 1], 0),
    5: ([125, 22, 1], 1728),
    7: ([49, 13, 1], 0),
    10: ([4, 0, 1], 1728),
    25: ([4, 0, 1], 1728),
}
SINGULAR_EMPTY = (4, 6, 8, 9, 12, 16, 18)
# level 13: (t^2+6t+13)(t^2+5t+13), assignment checked by computation
SINGULAR_13 = ([13, 6, 1], [13, 5, 1])

# t with j_{n,1}(t) = j_{n,2}(t) in {0, 1728}
COINCIDENCE = {2: [-64], 3: [-27]}

BEZOUT_CONSTANTS = {4: (2 ** 28, 6), 6: (2 ** 16 * 3 ** 24, 15), 9: (3 ** 39, 15)}
