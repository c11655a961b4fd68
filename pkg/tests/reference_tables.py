"""Reproduction targets: summary statistics of the reference simulation study.

Each entry maps (method, h, n, param) -> (mean, sd) from a 5000-replication
run of the corresponding scenario.  The acceptance suite re-runs every cell
and checks agreement within Monte Carlo tolerance.
"""

# Scenario 1: two independent AR(1) series, parameter rho.
INDEPENDENT_AR1 = {
    ("kendall", 1, 100, "0.1"): (0.007, 0.062),
    ("kendall", 1, 100, "0.5"): (0.012, 0.087),
    ("kendall", 1, 100, "0.9"): (0.018, 0.168),
    ("kendall", 1, 300, "0.1"): (0.003, 0.035),
    ("kendall", 1, 300, "0.5"): (0.004, 0.051),
    ("kendall", 1, 300, "0.9"): (0.008, 0.111),
    ("kendall", 1, 500, "0.1"): (0.002, 0.027),
    ("kendall", 1, 500, "0.5"): (0.003, 0.040),
    ("kendall", 1, 500, "0.9"): (0.006, 0.088),
    ("opd", 1, 100, "0.1"): (0.009, 0.106),
    ("opd", 1, 100, "0.5"): (0.011, 0.101),
    ("opd", 1, 100, "0.9"): (0.008, 0.098),
    ("opd", 1, 300, "0.1"): (0.003, 0.062),
    ("opd", 1, 300, "0.5"): (0.004, 0.059),
    ("opd", 1, 300, "0.9"): (0.003, 0.058),
    ("opd", 1, 500, "0.1"): (0.002, 0.048),
    ("opd", 1, 500, "0.5"): (0.003, 0.046),
    ("opd", 1, 500, "0.9"): (0.001, 0.044),
    ("kendall", 2, 100, "0.1"): (0.008, 0.053),
    ("kendall", 2, 100, "0.5"): (0.015, 0.083),
    ("kendall", 2, 100, "0.9"): (0.031, 0.170),
    ("kendall", 2, 300, "0.1"): (0.003, 0.030),
    ("kendall", 2, 300, "0.5"): (0.005, 0.048),
    ("kendall", 2, 300, "0.9"): (0.013, 0.111),
    ("kendall", 2, 500, "0.1"): (0.002, 0.023),
    ("kendall", 2, 500, "0.5"): (0.003, 0.038),
    ("kendall", 2, 500, "0.9"): (0.009, 0.089),
    ("opd", 2, 100, "0.1"): (0.003, 0.055),
    ("opd", 2, 100, "0.5"): (0.004, 0.055),
    ("opd", 2, 100, "0.9"): (0.004, 0.056),
    ("opd", 2, 300, "0.1"): (0.001, 0.033),
    ("opd", 2, 300, "0.5"): (0.002, 0.032),
    ("opd", 2, 300, "0.9"): (0.001, 0.033),
    ("opd", 2, 500, "0.1"): (0.000, 0.025),
    ("opd", 2, 500, "0.5"): (0.001, 0.025),
    ("opd", 2, 500, "0.9"): (0.000, 0.025),
    ("kendall", 3, 100, "0.1"): (0.006, 0.043),
    ("kendall", 3, 100, "0.5"): (0.015, 0.076),
    ("kendall", 3, 100, "0.9"): (0.040, 0.169),
    ("kendall", 3, 300, "0.1"): (0.002, 0.024),
    ("kendall", 3, 300, "0.5"): (0.005, 0.044),
    ("kendall", 3, 300, "0.9"): (0.016, 0.111),
    ("kendall", 3, 500, "0.1"): (0.001, 0.019),
    ("kendall", 3, 500, "0.5"): (0.003, 0.035),
    ("kendall", 3, 500, "0.9"): (0.012, 0.089),
    ("opd", 3, 100, "0.1"): (0.001, 0.027),
    ("opd", 3, 100, "0.5"): (0.001, 0.027),
    ("opd", 3, 100, "0.9"): (0.002, 0.031),
    ("opd", 3, 300, "0.1"): (0.001, 0.015),
    ("opd", 3, 300, "0.5"): (0.001, 0.016),
    ("opd", 3, 300, "0.9"): (0.001, 0.018),
    ("opd", 3, 500, "0.1"): (-0.000, 0.012),
    ("opd", 3, 500, "0.5"): (0.000, 0.013),
    ("opd", 3, 500, "0.9"): (0.000, 0.014),
}

# Scenario 2: i.i.d. block-multinormal vector pairs, parameter rho.
BLOCK_MULTINORMAL = {
    ("kendall", 1, 100, "0.1"): (0.045, 0.034),
    ("kendall", 1, 100, "0.2"): (0.091, 0.037),
    ("kendall", 1, 100, "0.3"): (0.141, 0.039),
    ("kendall", 1, 300, "0.1"): (0.045, 0.020),
    ("kendall", 1, 300, "0.2"): (0.091, 0.021),
    ("kendall", 1, 300, "0.3"): (0.142, 0.022),
    ("kendall", 1, 500, "0.1"): (0.045, 0.015),
    ("kendall", 1, 500, "0.2"): (0.091, 0.016),
    ("kendall", 1, 500, "0.3"): (0.142, 0.017),
    ("opd", 1, 100, "0.1"): (0.066, 0.064),
    ("opd", 1, 100, "0.2"): (0.129, 0.063),
    ("opd", 1, 100, "0.3"): (0.196, 0.066),
    ("opd", 1, 300, "0.1"): (0.065, 0.036),
    ("opd", 1, 300, "0.2"): (0.128, 0.037),
    ("opd", 1, 300, "0.3"): (0.195, 0.038),
    ("opd", 1, 500, "0.1"): (0.065, 0.029),
    ("opd", 1, 500, "0.2"): (0.128, 0.028),
    ("opd", 1, 500, "0.3"): (0.195, 0.030),
    ("kendall", 2, 100, "0.1"): (0.031, 0.030),
    ("kendall", 2, 100, "0.2"): (0.063, 0.033),
    ("kendall", 2, 100, "0.3"): (0.100, 0.036),
    ("kendall", 2, 300, "0.1"): (0.030, 0.017),
    ("kendall", 2, 300, "0.2"): (0.062, 0.019),
    ("kendall", 2, 300, "0.3"): (0.100, 0.021),
    ("kendall", 2, 500, "0.1"): (0.030, 0.013),
    ("kendall", 2, 500, "0.2"): (0.063, 0.015),
    ("kendall", 2, 500, "0.3"): (0.100, 0.016),
    ("opd", 2, 100, "0.1"): (0.031, 0.034),
    ("opd", 2, 100, "0.2"): (0.065, 0.037),
    ("opd", 2, 100, "0.3"): (0.101, 0.040),
    ("opd", 2, 300, "0.1"): (0.030, 0.020),
    ("opd", 2, 300, "0.2"): (0.064, 0.022),
    ("opd", 2, 300, "0.3"): (0.102, 0.024),
    ("opd", 2, 500, "0.1"): (0.030, 0.016),
    ("opd", 2, 500, "0.2"): (0.064, 0.017),
    ("opd", 2, 500, "0.3"): (0.102, 0.018),
    ("kendall", 3, 100, "0.1"): (0.019, 0.024),
    ("kendall", 3, 100, "0.2"): (0.041, 0.029),
    ("kendall", 3, 100, "0.3"): (0.067, 0.033),
    ("kendall", 3, 300, "0.1"): (0.019, 0.014),
    ("kendall", 3, 300, "0.2"): (0.042, 0.017),
    ("kendall", 3, 300, "0.3"): (0.068, 0.019),
    ("kendall", 3, 500, "0.1"): (0.019, 0.011),
    ("kendall", 3, 500, "0.2"): (0.041, 0.013),
    ("kendall", 3, 500, "0.3"): (0.069, 0.015),
    ("opd", 3, 100, "0.1"): (0.011, 0.017),
    ("opd", 3, 100, "0.2"): (0.024, 0.020),
    ("opd", 3, 100, "0.3"): (0.041, 0.023),
    ("opd", 3, 300, "0.1"): (0.011, 0.010),
    ("opd", 3, 300, "0.2"): (0.024, 0.012),
    ("opd", 3, 300, "0.3"): (0.041, 0.013),
    ("opd", 3, 500, "0.1"): (0.011, 0.008),
    ("opd", 3, 500, "0.2"): (0.024, 0.009),
    ("opd", 3, 500, "0.3"): (0.041, 0.010),
}

# Scenario 3: AR(1) paired with itself shifted one step ahead, parameter rho.
SHIFTED_AR1 = {
    ("kendall", 1, 100, "0.1"): (0.354, 0.059),
    ("kendall", 1, 100, "0.5"): (0.509, 0.058),
    ("kendall", 1, 100, "0.9"): (0.738, 0.055),
    ("kendall", 1, 300, "0.1"): (0.360, 0.034),
    ("kendall", 1, 300, "0.5"): (0.521, 0.033),
    ("kendall", 1, 300, "0.9"): (0.777, 0.030),
    ("kendall", 1, 500, "0.1"): (0.361, 0.026),
    ("kendall", 1, 500, "0.5"): (0.524, 0.025),
    ("kendall", 1, 500, "0.9"): (0.784, 0.023),
    ("opd", 1, 100, "0.1"): (-0.282, 0.083),
    ("opd", 1, 100, "0.5"): (-0.152, 0.090),
    ("opd", 1, 100, "0.9"): (-0.026, 0.097),
    ("opd", 1, 300, "0.1"): (-0.292, 0.049),
    ("opd", 1, 300, "0.5"): (-0.159, 0.053),
    ("opd", 1, 300, "0.9"): (-0.030, 0.057),
    ("opd", 1, 500, "0.1"): (-0.295, 0.038),
    ("opd", 1, 500, "0.5"): (-0.158, 0.041),
    ("opd", 1, 500, "0.9"): (-0.030, 0.044),
    ("kendall", 2, 100, "0.1"): (0.437, 0.070),
    ("kendall", 2, 100, "0.5"): (0.575, 0.065),
    ("kendall", 2, 100, "0.9"): (0.783, 0.055),
    ("kendall", 2, 300, "0.1"): (0.450, 0.038),
    ("kendall", 2, 300, "0.5"): (0.591, 0.036),
    ("kendall", 2, 300, "0.9"): (0.816, 0.027),
    ("kendall", 2, 500, "0.1"): (0.453, 0.030),
    ("kendall", 2, 500, "0.5"): (0.594, 0.027),
    ("kendall", 2, 500, "0.9"): (0.823, 0.021),
    ("opd", 2, 100, "0.1"): (-0.088, 0.037),
    ("opd", 2, 100, "0.5"): (-0.030, 0.044),
    ("opd", 2, 100, "0.9"): (0.050, 0.052),
    ("opd", 2, 300, "0.1"): (-0.088, 0.021),
    ("opd", 2, 300, "0.5"): (-0.028, 0.025),
    ("opd", 2, 300, "0.9"): (0.052, 0.030),
    ("opd", 2, 500, "0.1"): (-0.087, 0.016),
    ("opd", 2, 500, "0.5"): (-0.028, 0.019),
    ("opd", 2, 500, "0.9"): (0.052, 0.024),
    ("kendall", 3, 100, "0.1"): (0.462, 0.083),
    ("kendall", 3, 100, "0.5"): (0.602, 0.075),
    ("kendall", 3, 100, "0.9"): (0.804, 0.058),
    ("kendall", 3, 300, "0.1"): (0.485, 0.047),
    ("kendall", 3, 300, "0.5"): (0.624, 0.040),
    ("kendall", 3, 300, "0.9"): (0.837, 0.027),
    ("kendall", 3, 500, "0.1"): (0.489, 0.035),
    ("kendall", 3, 500, "0.5"): (0.629, 0.030),
    ("kendall", 3, 500, "0.9"): (0.844, 0.020),
    ("opd", 3, 100, "0.1"): (-0.029, 0.016),
    ("opd", 3, 100, "0.5"): (-0.008, 0.024),
    ("opd", 3, 100, "0.9"): (0.040, 0.038),
    ("opd", 3, 300, "0.1"): (-0.025, 0.010),
    ("opd", 3, 300, "0.5"): (-0.003, 0.014),
    ("opd", 3, 300, "0.9"): (0.045, 0.022),
    ("opd", 3, 500, "0.1"): (-0.024, 0.007),
    ("opd", 3, 500, "0.5"): (-0.002, 0.011),
    ("opd", 3, 500, "0.9"): (0.046, 0.017),
}

REFERENCE_REPS = 5000
