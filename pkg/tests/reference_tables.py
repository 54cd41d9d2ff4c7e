"""Published reference-table values (4 significant digits) used as golden data.

Entries are (k, |remainder| as printed, bound as printed).  Tables 2 and 3
carry one block per scale value, keyed by a.  Comparison tolerance is plus or
minus two units of the fourth significant digit, which absorbs any rounding
mode the source may have used.
"""

import math

TABLE1 = {
    1.0: [
        (1, 1.250e-5, 1.253e-5),
        (2, 8.571e-7, 8.588e-7),
        (3, 9.818e-8, 9.838e-8),
        (5, 2.883e-9, 2.888e-9),
        (10, 3.905e-12, 3.913e-12),
        (20, 3.186e-16, 3.193e-16),
        (30, 2.305e-19, 2.309e-19),
        (50, 2.433e-24, 2.438e-24),
    ],
}

TABLE2 = {
    2.0: [
        (1, 5.987e-5, 6.364e-5),
        (2, 7.856e-6, 8.355e-6),
        (3, 1.563e-6, 1.662e-6),
        (5, 1.162e-7, 1.236e-7),
        (10, 9.509e-10, 1.011e-9),
        (20, 1.075e-12, 1.143e-12),
        (30, 6.016e-15, 6.398e-15),
        (50, 1.668e-18, 1.774e-18),
    ],
    0.5: [
        (1, 1.693e-4, 1.800e-4),
        (2, 2.222e-5, 2.363e-5),
        (3, 4.420e-6, 4.700e-6),
        (5, 3.287e-7, 3.496e-7),
        (10, 2.689e-9, 2.860e-9),
        (20, 3.040e-12, 3.234e-12),
        (30, 1.702e-14, 1.810e-14),
        (50, 4.719e-18, 5.019e-18),
    ],
}

TABLE3 = {
    2.0: [
        (0, 2.230e-4, 2.376e-4),
        (1, 2.018e-5, 2.147e-5),
        (2, 3.376e-6, 3.591e-6),
        (5, 6.603e-8, 7.022e-8),
        (10, 6.340e-10, 6.743e-10),
        (20, 8.067e-13, 8.579e-13),
        (30, 4.760e-15, 5.063e-15),
        (40, 6.287e-17, 6.686e-17),
    ],
    0.5: [
        (0, 6.307e-4, 6.720e-4),
        (1, 5.708e-5, 6.072e-5),
        # The k=2 bound below is not reproducible from the bound formula:
        # every other row in this block has bound/remainder ~ 1.064 while this
        # cell prints 1.158, and the recomputed value is 1.0156e-5.  The
        # printed 1.106e-5 looks like a digit transposition of 1.016e-5.
        (2, 9.548e-6, 1.106e-5),
        (5, 1.867e-7, 1.986e-7),
        (10, 1.793e-9, 1.907e-9),
        (20, 2.282e-12, 2.427e-12),
        (30, 1.346e-14, 1.432e-14),
        (40, 1.778e-16, 1.891e-16),
    ],
}


def fourth_digit_tol(printed: float) -> float:
    """Two units of the fourth significant digit of a printed value."""
    return 2.0 * 10.0 ** (math.floor(math.log10(abs(printed))) - 3)
