"""Embedded data for the ten genus-zero moonshine groups.

Each entry lists the Hauptmodul t as an eta quotient (x = 1/t), the
polynomials w(x) and R(x) in factored form, the degree n of the modular
equation, the CM data (tau0 = (p + sqrt(d))/r, a group element gamma and
an upper-triangular A with gamma*tau0 = A*tau0), and the expected values
used as test oracles.

Modular equations are written row by row: ``psi_rows[j]`` is the
coefficient of Y**j as a list of X-coefficients, constant term first.
Recurrence rows give P_j(n) = c0 + c1 n + c2 n^2 + c3 n^3 for
j = 0, 1, ..., J in the relation sum_j P_j(n) A_{n-j} = 0.
"""

from fractions import Fraction as F

BUILTIN_GROUPS = [
    {
        "label": "14+7",
        "level": 14,
        "eta": {"factors": [(1, 1), (7, 1), (2, -1), (14, -1)], "power": 3},
        "w": [[1, 1], [1, 8], [1, 5, 8]],
        "R": [[-8], [0, 1], [1, 4], [1, 7, 8]],
        "n": 3,
        "psi_rows": {
            4: [1],
            3: [0, -18, -72, -64],
            2: [0, -9, -54, -72],
            1: [0, -1, -9, -18],
            0: [0, 0, 0, 0, 1],
        },
        "recurrence": [
            [0, 0, 0, 2],
            [-8, 30, -42, 28],
            [-176, 420, -366, 122],
            [-864, 1584, -1008, 224],
            [-1024, 1536, -768, 128],
        ],
        "initials": [1, -4, 16, -72],
        "tau0": (-7, -21, 14),
        "gamma": (-7, -3, -14, -7),
        "A": (1, 2, 0, 3),
        # printed as (1 -5/7; 2 1); gamma^-1 A gives a' = -1 (the printed a' fails M tau0 = tau0)
        "M_printed": (1, F(-5, 7), 2, 1),
        "x0": (F(-3, 4), F(1, 4), 7),
        "B": "3/2*sqrt(4 - 3*sqrt(7)/2)",
        "C": "1/14*(588 - 223*sqrt(7) + 13*sqrt(889 - 336*sqrt(7)))*sqrt(4 + 3*sqrt(7)/2)",
    },
    {
        "label": "14+14",
        "level": 14,
        "eta": {"factors": [(2, 1), (7, 1), (1, -1), (14, -1)], "power": 4},
        "w": [[1, -14, 19, -14, 1]],
        "R": [[0, 1], [6, -25, 34, -4]],
        "n": 3,
        "psi_rows": {
            4: [1],
            3: [0, -18, 12, -1],
            2: [0, 12, 9, 12],
            1: [0, -1, 12, -18],
            0: [0, 0, 0, 0, 1],
        },
        "recurrence": [
            [0, 0, 0, 2],
            [6, -26, 42, -28],
            [-50, 126, -114, 38],
            [102, -194, 126, -28],
            [-16, 24, -12, 2],
        ],
        "initials": [1, 3, 16, 117],
        "tau0": (0, -42, 14),
        "gamma": (0, 1, -14, 0),
        "A": (1, 0, 0, 3),
        "M_printed": (0, F(-3, 14), 1, 0),
        # printed as 2/(23 + 5 sqrt(21))
        "x0": (F(23, 2), F(-5, 2), 21),
        "B": "8*sqrt(6/(527 + 115*sqrt(21)))",
        "C": "4*(747 + 163*sqrt(21))*sqrt(2/3*(527 - 115*sqrt(21)))/(23 + 5*sqrt(21))**2",
    },
    {
        "label": "15+15",
        "level": 15,
        "eta": {"factors": [(3, 1), (5, 1), (1, -1), (15, -1)], "power": 3},
        "w": [[-1, -1, 1], [-1, 11, 1]],
        "R": [[4], [0, 1], [1, 4, -6, -1]],
        "n": 2,
        "psi_rows": {
            3: [1],
            2: [0, 6, 1],
            1: [0, -1, 6],
            0: [0, 0, 0, 1],
        },
        "recurrence": [
            [0, 0, 0, 2],
            [4, -18, 30, -20],
            [32, -84, 78, -26],
            [-72, 138, -90, 20],
            [-16, 24, -12, 2],
        ],
        "initials": [1, 2, 11, 72],
        "tau0": (0, -30, 15),
        "gamma": (0, -1, 15, 0),
        "A": (1, 0, 0, 2),
        "M_printed": (0, F(2, 15), -1, 0),
        "x0": (-7, 5, 2),
        "B": "2*sqrt(6*(99 - 70*sqrt(2)))",
        "C": "6*sqrt(3*(99 - 70*sqrt(2))) + 2*(-536 + 379*sqrt(2))*sqrt(3*(99 + 70*sqrt(2)))",
    },
    {
        "label": "16+",
        "level": 16,
        "eta": {"factors": [(2, 6), (8, 6), (1, -4), (4, -4), (16, -4)], "power": 1},
        "w": [[1, -2], [1, -2], [1, -12, 4]],
        "R": [[8], [0, 1], [1, -2], [1, -8, 4]],
        "n": 3,
        "psi_rows": {
            4: [1],
            3: [0, -24, 48, -16],
            2: [0, 12, -42, 48],
            1: [0, -1, 12, -24],
            0: [0, 0, 0, 0, 1],
        },
        "recurrence": [
            [0, 0, 0, 2],
            [8, -32, 48, -32],
            [-160, 384, -336, 112],
            [480, -896, 576, -128],
            [-256, 384, -192, 32],
        ],
        "initials": [1, 4, 20, 128],
        "tau0": (8, -3, 4),
        "gamma": (-16, 33, -16, 32),
        "A": (1, 1, 0, 3),
        "M_printed": (2, F(-67, 16), 1, -2),
        "x0": (F(5, 2), -1, 6),
        "B": "2*(-2 + sqrt(6))*sqrt(15 - 6*sqrt(6))",
        "C": "2*(-12 + 5*sqrt(6))*sqrt(1/3*(5 - 2*sqrt(6)))",
    },
    {
        "label": "20+20",
        "level": 20,
        "eta": {"factors": [(4, 1), (5, 1), (1, -1), (20, -1)], "power": 2},
        "w": [[1, 1], [1, 1], [1, -8, -2, -8, 1]],
        "R": [[0, 1], [1, 1], [2, 25, 31, 47, -9]],
        "n": 3,
        "psi_rows": {
            4: [1],
            3: [0, 3, 6, -1],
            2: [0, 6, 18, 6],
            1: [0, -1, 6, 3],
            0: [0, 0, 0, 0, 1],
        },
        "recurrence": [
            [0, 0, 0, 2],
            [2, -10, 18, -12],
            [54, -122, 102, -34],
            [168, -292, 180, -40],
            [312, -428, 204, -34],
            [190, -226, 90, -12],
            [-54, 54, -18, 2],
        ],
        "initials": [1, 1, 6, 30, 175, 1087],
        "tau0": (0, -15, 10),
        "gamma": (0, -1, 20, 0),
        "A": (1, 0, 0, 3),
        "M_printed": (0, F(3, 20), -1, 0),
        "x0": (7, -4, 3),
        "B": "-16*(-2 + sqrt(3))*sqrt(3*(97 - 56*sqrt(3)))",
        # the printed bracketing is unbalanced; this reading closes the group after the
        # (-3064 + 1769 sqrt(3)) factor's product with sqrt(97 + 56 sqrt(3))
        "C": "4*(14*sqrt(97 - 56*sqrt(3)) - 7*sqrt(3*(97 - 56*sqrt(3))) + 3*(-3064 + 1769*sqrt(3))*sqrt(97 + 56*sqrt(3)))",
        "C_note": "printed bracketing ambiguous",
    },
    {
        "label": "21+21",
        "level": 21,
        "eta": {"factors": [(3, 1), (7, 1), (1, -1), (21, -1)], "power": 2},
        "w": [[1, -1], [1, -1], [1, -6, -17, -6, 1]],
        "R": [[0, 4, 4, -70, 16, 52, -9]],
        "n": 2,
        "psi_rows": {
            3: [1],
            2: [0, 4, -1],
            1: [0, -1, 4],
            0: [0, 0, 0, 1],
        },
        "recurrence": [
            [0, 0, 0, 2],
            [4, -16, 24, -16],
            [8, -24, 24, -8],
            [-210, 338, -198, 44],
            [64, -96, 48, -8],
            [260, -304, 120, -16],
            [-54, 54, -18, 2],
        ],
        "initials": [1, 2, 8, 37, 204, 1218],
        "tau0": (0, -42, 21),
        "gamma": (0, 1, -21, 0),
        "A": (1, 0, 0, 2),
        "M_printed": (0, F(-2, 21), 1, 0),
        "x0": (5, -2, 6),
        "B": "4*(-2 + sqrt(6))*sqrt(98 - 40*sqrt(6))",
        "C": "2/3*(-26*sqrt(147 - 60*sqrt(6)) + 39*sqrt(98 - 40*sqrt(6)) + (-7035*sqrt(2) + 5744*sqrt(3))*sqrt(49 + 20*sqrt(6)))",
        "C_note": "printed bracketing ambiguous",
    },
    {
        "label": "22+11",
        "level": 22,
        "eta": {"factors": [(1, 1), (11, 1), (2, -1), (22, -1)], "power": 2},
        "w": [[1, 4, 8, 4], [1, 8, 16, 16]],
        "R": [[-8], [0, 1], [1, 12, 57, 132, 160, 72]],
        "n": 3,
        "psi_rows": {
            4: [1],
            3: [0, -9, -24, -16],
            2: [0, -6, -24, -24],
            1: [0, -1, -6, -9],
            0: [0, 0, 0, 0, 1],
        },
        "recurrence": [
            [0, 0, 0, 2],
            [-8, 28, -36, 24],
            [-192, 416, -336, 112],
            [-1368, 2244, -1332, 296],
            [-4224, 5696, -2688, 448],
            [-6400, 7360, -2880, 384],
            [-3456, 3456, -1152, 128],
        ],
        "initials": [1, -4, 12, -36, 124, -496],
        "tau0": (-33, -33, 22),
        "gamma": (-11, -17, 22, 33),
        "A": (1, 0, 0, 3),
        "M_printed": (3, F(51, 11), -2, -3),
        "x0": (-1, F(1, 2), 3),
        "B": "sqrt(39 - 45*sqrt(3)/2)",
        "C": "1/4*(7*sqrt(52 - 30*sqrt(3)) + 3*(-149 + 86*sqrt(3))*sqrt(52 + 30*sqrt(3)))",
    },
    {
        "label": "26+26",
        "level": 26,
        "eta": {"factors": [(2, 1), (13, 1), (1, -1), (26, -1)], "power": 2},
        "w": [[1, -1], [1, -8, 8, -18, 8, -8, 1]],
        "R": [[F(1, 4)], [0, 1], [20, -109, 339, -521, 445, -335, 49]],
        "n": 3,
        "psi_rows": {
            4: [1],
            3: [0, -3, 6, -1],
            2: [0, 6, -9, 6],
            1: [0, -1, 6, -3],
            0: [0, 0, 0, 0, 1],
        },
        "recurrence": [
            [0, 0, 0, 2],
            [5, -19, 27, -18],
            [F(-109, 2), F(237, 2), -96, 32],
            [F(1017, 4), F(-807, 2), 234, -52],
            [-521, F(1353, 2), -312, 52],
            [F(2225, 4), F(-1245, 2), 240, -32],
            [F(-1005, 2), F(983, 2), -162, 18],
            [F(343, 4), F(-147, 2), 21, -2],
        ],
        "initials": [1, F(5, 2), F(59, 8), F(497, 16), F(19539, 128), F(207051, 256), F(4623151, 1024)],
        "tau0": (0, -78, 26),
        "gamma": (0, -1, 26, 0),
        "A": (1, 0, 0, 3),
        "M_printed": (0, F(3, 26), -1, 0),
        "x0": (F(11, 2), F(-3, 2), 13),
        "B": "12*sqrt(-8574 + 2378*sqrt(13))",
        "C": "2*(-41828 + 11601*sqrt(13))*sqrt(8574 + 2378*sqrt(13))",
    },
    {
        "label": "35+35",
        "level": 35,
        "eta": {"factors": [(5, 1), (7, 1), (1, -1), (35, -1)], "power": 1},
        "w": [[1, 1, -1], [1, -5, 0, -9, 0, -5, -1]],
        "R": [[-1], [0, 1], [-2, -9, -14, -47, 30, -57, 50, 16]],
        "n": 2,
        "psi_rows": {
            3: [1],
            2: [0, 2, 1],
            1: [0, -1, 2],
            0: [0, 0, 0, 1],
        },
        "recurrence": [
            [0, 0, 0, 2],
            [2, -8, 12, -8],
            [18, -42, 36, -12],
            [42, -64, 36, -8],
            [188, -238, 108, -18],
            [-150, 160, -60, 8],
            [342, -330, 108, -12],
            [-350, 296, -84, 8],
            [-128, 96, -24, 2],
        ],
        "initials": [1, 1, 3, 10, 38, 150, 627, 2703],
        "tau0": (0, -70, 35),
        "gamma": (0, -1, 35, 0),
        "A": (1, 0, 0, 2),
        "M_printed": (0, F(2, 35), -1, 0),
        "x0": (-3, 1, 10),
        "B": "2*sqrt(14*(721 - 228*sqrt(10)))",
        "C": "2*(2*sqrt(2) - sqrt(5))*sqrt(7*(721 - 228*sqrt(10)))",
    },
    {
        "label": "39+39",
        "level": 39,
        "eta": {"factors": [(3, 1), (13, 1), (1, -1), (39, -1)], "power": 1},
        "w": [[1, 1], [1, 1], [1, -7, 11, -7, 1], [1, 1, -1, 1, 1]],
        "R": [[0, 1], [2, 17, -48, -25, 194, -45, -168, 137, 82, -25]],
        "n": 2,
        "psi_rows": {
            3: [1],
            2: [0, 2, -1],
            1: [0, -1, 2],
            0: [0, 0, 0, 1],
        },
        "recurrence": [
            [0, 0, 0, 2],
            [2, -8, 12, -8],
            [34, -66, 48, -16],
            [-144, 204, -108, 24],
            [-100, 114, -48, 8],
            [970, -938, 330, -44],
            [-270, 234, -72, 8],
            [-1176, 924, -252, 24],
            [1096, -786, 192, -16],
            [738, -488, 108, -8],
            [-250, 150, -30, 2],
        ],
        "initials": [1, 1, 4, 10, 38, 140, 563, 2315, 9816, 42432],
        "tau0": (0, -78, 39),
        "gamma": (0, -1, 39, 0),
        "A": (1, 0, 0, 2),
        "M_printed": (0, F(2, 39), -1, 0),
        "x0": (3, -2, 2),
        "B": "-4*(-2 + sqrt(2))*sqrt(6*(577 - 408*sqrt(2)))",
        "C": "44*sqrt(3*(577 - 408*sqrt(2))) - 22*sqrt(6*(577 - 408*sqrt(2))) + 2*(-47420 + 33531*sqrt(2))*sqrt(3*(577 + 408*sqrt(2)))",
    },
]
