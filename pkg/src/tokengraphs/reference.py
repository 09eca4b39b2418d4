"""Published reference values for the cycle token graphs ``F_2(C_n)``.

Values are transcribed as printed. Known transcription problems in the
printed source are kept verbatim here and corrected only where flagged.
"""

from __future__ import annotations

import math

# spec B(zeta^r) for F_2(C_9), r = 0..4, and the column holding the C_9 eigenvalue
TABLE_C9 = {
    0: (0.0, 1.171572876, 4.0, 6.828427124),
    1: (0.4679111136, 2.52079560, 5.420264509, 7.470414013),
    2: (0.783324839, 1.65270363, 3.895673125, 6.136209510),
    3: (1.50913638, 3.0, 4.656620432, 5.834243185),
    4: (1.939683655, 3.382489411, 3.87938479, 4.451145779),
}
TABLE_C9_CYCLE_COLUMN = {0: 0, 1: 0, 2: 1, 3: 1, 4: 2}

# Gershgorin left endpoints (l1, l2, l3) of B*(r) for n = 9, r = 0..3
GERSHGORIN_C9 = {
    0: (0.0, 0.0, 0.0),
    1: (0.1206147584, 0.24122951686, 4.0),
    2: (0.4679111138, 0.93582222752, 0.93582222752),
    3: (1.0, 2.0, 4.0),
}

# spec B(zeta^r) for F_2(C_6) from the Z_3 lift, exact
_S5, _S17 = math.sqrt(5), math.sqrt(17)
TABLE_C6 = {
    0: (0.0, 2.0, 5 - _S5, 4.0, 5 + _S5),
    1: (1.0, (7 - _S17) / 2, 3.0, 5.0, (7 + _S17) / 2),
    2: (1.0, (7 - _S17) / 2, 3.0, 5.0, (7 + _S17) / 2),
}

# spec B*(r) of the even over-lift for n = 8, r = 0..4
TABLE_C8 = {
    0: (0.0, 1.506040792, 4.890083735, 7.603875471),
    1: (0.5857864376, 3.12596795, 4.0, 6.288245611),
    2: (0.9486257582, 2.0, 4.517304045, 6.534070196),
    3: (1.711754388, 3.414213562, 4.0, 4.87403204),
    4: (2.0, 4.0, 4.0, 4.0),
}

# spec L(F_2(C_8)) as (value, multiplicity); 4.8740 is printed with a decimal comma
SPEC_F2_C8 = (
    (0.0, 1), (0.5857, 2), (0.9486, 2), (1.5060, 1), (1.7117, 2), (2.0, 3),
    (3.1259, 2), (3.4142, 2), (4.0, 3), (4.5173, 2), (4.8740, 2), (4.8900, 1),
    (6.2882, 2), (6.5340, 2), (7.6038, 1),
)

Q_PATH_C8 = ((2, -2, 0, 0), (-2, 4, -2, 0), (0, -2, 4, -2), (0, 0, -4, 4))
Q_PATH_C8_SPEC = (0.0, 1.5060, 4.8900, 7.6038)
Q_U_C8 = (
    (2, -1, 0, 0, 0, -1, 0),
    (-1, 4, -1, 0, -1, 0, -1),
    (0, -1, 4, -2, 0, -1, 0),
    (0, 0, -2, 4, -2, 0, 0),
    (0, -1, 0, -2, 4, -1, 0),
    (-1, 0, -1, 0, -1, 4, -1),
    (0, -1, 0, 0, 0, -1, 2),
)
Q_U_C8_SPEC = (0.0, 1.5060, 2.0, 4.0, 4.0, 4.8900, 7.6038)

# sum_r tr(B(zeta^r)^l) and tr(L^l) for F_2(C_8), l = 0..7, as printed
TRACE_SUMS_C8 = (32, 112, 512, 2656, 14976, 9792, 564032, 3670464)
TRACE_L_C8 = (28, 96, 448, 2400, 13952, 85696, 547648, 3604928)

# (family spec, alpha(G), alpha(G \ i), deleted vertex, last printed digit) for rows
# with a constructor; the digit is 0 for exact entries
TABLE_VT = (
    ("complete:5", 5.0, 4.0, 0, 0.0),
    ("complete:7", 7.0, 6.0, 0, 0.0),
    ("petersen", 2.0, 1.26, 0, 0.01),
    ("complete:4", 4.0, 3.0, 0, 0.0),  # tetrahedron
    ("complete_multipartite:2,2,2", 4.0, 3.0, 0, 0.0),  # octahedron
    ("hypercube:3", 2.0, 2 * (1 - math.cos(2 * math.pi / 5)), 0, 0.0),  # hexahedron
)
