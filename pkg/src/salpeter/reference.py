"""Published reference values used by ``salpeter table`` and the regression tests.

All couplings refer to R = 1 and two identical particles (alpha = 2) unless
stated otherwise.
"""

# c(l), four significant digits
C_ELL = {
    1: 3.205, 2: 2.795, 3: 2.678, 4: 2.625, 5: 2.596, 6: 2.578, 7: 2.566,
    8: 2.557, 9: 2.550, 10: 2.545, 11: 2.541, 12: 2.538, 13: 2.535, 14: 2.533,
    15: 2.531, 16: 2.529, 17: 2.528, 18: 2.526, 19: 2.525, 20: 2.524,
    30: 2.518, 40: 2.515, 50: 2.513, 60: 2.512, 70: 2.511, 80: 2.511,
    90: 2.510, 100: 2.510,
}
C_ELL_TOL = 0.002

# l = 0 critical couplings against beta = mR: n = 2 trace bound, Daubechies bound, exact
CRITICAL_S_WAVE = {
    "exp": {
        "trace": (4.443, 1.223, 0.6739, 0.4604, 0.3487, 0.2803),
        "daubechies": (4.370, 0.6574, 0.3374, 0.2261, 0.1698, 0.1360),
        "exact": (5.574, 1.361, 0.7133, 0.4804, 0.3616, 0.2898),
    },
    "pt": {
        "trace": (4.126, 1.512, 0.8912, 0.6233, 0.4769, 0.3854),
        "daubechies": (3.886, 0.8631, 0.4582, 0.3092, 0.2329, 0.1867),
        "exact": (5.008, 1.742, 0.9598, 0.6549, 0.4956, 0.3981),
    },
}
CRITICAL_S_WAVE_BETAS = (0, 1, 2, 3, 4, 5)

# l = 1..5 critical couplings at m = 0: p-optimised condition, max condition, exact
CRITICAL_L_WAVE = {
    "exp": {
        "existence-p": (8.524, 13.67, 19.03, 24.44, 29.88),
        "existence-max": (6.922, 12.81, 18.46, 24.02, 29.53),
        "exact": (10.98, 16.39, 21.81, 27.24, 32.67),
    },
    "pt": {
        "existence-p": (7.437, 11.59, 15.91, 20.30, 24.73),
        "existence-max": (5.687, 10.53, 15.17, 19.73, 24.27),
        "exact": (9.545, 14.04, 18.52, 22.99, 27.46),
    },
}
CRITICAL_L_WAVE_ELLS = (1, 2, 3, 4, 5)

# relative tolerances per method
CRITICAL_TOL = {"trace": 0.005, "daubechies": 0.005, "exact": 0.01,
                "existence-p": 0.01, "existence-max": 0.005}

# largest angular momentum at m = 0: bound L+ and exact L
L_MAX_G = (10, 20, 30, 40, 50, 100, 150, 200)
L_MAX = {
    "exp": {"bound": (1, 3, 5, 6, 8, 17, 27, 36), "exact": (0, 2, 4, 6, 8, 17, 26, 35)},
    "pt": {"bound": (1, 4, 6, 8, 10, 21, 33, 44), "exact": (1, 3, 5, 7, 10, 21, 32, 43)},
}

# massless oscillator k = 1, l = 0, alpha = 1: bound at E = lambda_n and exact counts below
OSCILLATOR_IMPLIED = (1, 8, 21)
OSCILLATOR_EXACT = (0, 1, 2)

# l = 0 massless existence limits for alpha = 2
EXISTENCE_S_WAVE = {"exp": 4.000, "pt": 3.685}
EXISTENCE_S_WAVE_TOL = 0.002

SQUARE_WELL_CROSSOVER = 0.4859
B_523_BOUND = 2.172
