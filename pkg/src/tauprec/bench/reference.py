"""Published reference values shown next to the computed ones in the reports."""
from typing import Dict, Mapping, Optional, Sequence, Tuple

# Interior sizes n with n + 1 = 2^6 .. 2^9.
SIZES_1D: Tuple[int, ...] = (63, 127, 255, 511)
SIZES_2D: Tuple[int, ...] = (16, 32, 64, 128)

Table = Mapping[str, Mapping[float, Sequence[Optional[float]]]]

ITERATIONS_1D: Table = {
    "P_F": {1.2: (7.2, 8.6, 9.9, 9.9), 1.5: (6.7, 8.0, 8.5, 10.0), 1.8: (6.1, 6.8, 7.0, 8.6)},
    "P_full": {1.2: (14, 14, 14, 13), 1.5: (13, 13, 13, 12), 1.8: (10, 11, 10, 9)},
    "P_C (variant)": {1.2: (13, 14, 13, 12), 1.5: (12, 12, 12, 12), 1.8: (9, 9, 9, 9)},
    "I": {1.2: (28, 39, 46, 51), 1.5: (32, 60, 89, 122), 1.8: (32, 67, 131, 231.2)},
    "P_tri": {1.2: (5, 5, 5, 5), 1.5: (7, 8, 11, 13), 1.8: (7, 10, 15, 22)},
    "P~": {1.2: (7.5, 8.5, 9.9, 9.9), 1.5: (8.7, 8.0, 8.4, 9.9), 1.8: (8.0, 7.8, 6.9, 7.0)},
}

KAPPA_1D: Table = {
    "P_F": {
        1.2: (30.8, 63.7, 132.2, 274.7),
        1.5: (16.1, 33.3, 70.9, 152.7),
        1.8: (9.7, 19.5, 40.8, 86.9),
    },
    "P_full": {1.2: (1.6, 1.8, 2.0, 2.2), 1.5: (1.8, 2.1, 2.3, 2.6), 1.8: (2.6, 2.8, 2.9, 2.9)},
    "P_C (variant)": {1.2: (3.3, 3.6, 3.8, 4.2), 1.5: (7.1, 9.2, 12.0, 15.8)},
    "I": {1.2: (9.6, 11.5, 13.4, 15.5)},
    "P_tri": {1.5: (2.4, 3.0, 4.0, 5.4), 1.8: (3.5, 5.6, 9.4, 16.6)},
    "P~": {1.2: (29.2, 58.7, 118.6, 239.7), 1.8: (9.0, 17.0, 33.1, 65.4)},
}

# 2D tables are keyed by example ("2": β = 1.6, "3": β = 1.2).
ITERATIONS_2D: Dict[str, Table] = {
    "2": {"P_F": {1.8: (8, 8, 9, 9)}, "I": {1.8: (37, 73, None, None)}},
    "3": {"P_F": {1.8: (10, 12, 13, 14.5)}, "I": {1.8: (49, 92, None, None)}},
}

KAPPA_2D: Dict[str, Table] = {
    "2": {"P_F": {1.8: (1.9, 2.7, 4.3, 7.7)}, "I": {1.8: (57.4, 167.4, None, None)}},
    "3": {"P_F": {1.8: (1.9, 2.7, 4.4, 7.9)}},
}

# American put, r = 0.1, σ = 0.3, K = 100, T = 1: time to expiry -> boundary.
PUT_TAUS: Tuple[float, ...] = (
    0.0868, 0.1515, 0.2321, 0.3039, 0.3697, 0.4480,
    0.5083, 0.5761, 0.6521, 0.7376, 0.8335, 0.9413,
)
PUT_BOUNDARY_PIA: Tuple[float, ...] = (
    87.3735, 85.0142, 83.0725, 81.8029, 80.8666, 79.9438,
    79.3373, 78.7375, 78.1472, 77.5655, 76.9949, 76.4356,
)
PUT_BOUNDARY_BS: Tuple[float, ...] = (
    87.3842, 85.0140, 83.0649, 81.7972, 80.8589, 79.9364,
    79.3312, 78.7328, 78.1428, 77.5623, 76.9919, 76.4336,
)
PUT_T10_BOUNDARY = 69.2371
PUT_PERPETUAL_BOUNDARY = 68.9655

# Time to expiry 0.5: price -> (PDE value, simulated value, simulation deviation).
SIMULATION_TAU = 0.5
SIMULATION: Dict[float, Tuple[float, float, float]] = {
    86.56: (15.236, 14.860, 0.215),
    96.94: (9.558, 9.422, 0.214),
    107.32: (5.883, 5.965, 0.184),
    117.71: (3.563, 3.510, 0.149),
    128.09: (2.142, 2.216, 0.119),
    138.47: (1.271, 1.280, 0.091),
    148.85: (0.751, 0.487, 0.055),
    159.24: (0.445, 0.321, 0.043),
    169.62: (0.267, 0.223, 0.035),
    180.00: (0.168, 0.146, 0.030),
}


def lookup(table: Table, label: str, alpha: float, n: int, sizes: Sequence[int] = SIZES_1D) -> Optional[float]:
    """Reference entry for ``(label, α, n)``, ``None`` when not published."""
    row = table.get(label, {}).get(round(alpha, 2))
    if row is None or n not in sizes:
        return None
    index = list(sizes).index(n)
    return row[index] if index < len(row) else None
