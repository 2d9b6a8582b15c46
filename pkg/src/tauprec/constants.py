"""Numerical defaults shared across the toolkit."""

# Krylov
GMRES_TOL = 1e-7
MINRES_TOL = 1e-7

# Dense analysis caps
DENSE_CAP_1D = 1024
DENSE_CAP_2D = 4096
EIG_CAP = 4096

# Spectral comparisons
EPS_CLUSTER = 0.1
EPS_OUTLIER = 0.5

# Matrix functions
POWER_ITERATIONS = 50
POWER_STAGNATION = 1e-6
NORM_ADMISSION = 0.99
TAYLOR_REL_TOL = 1e-14
TAYLOR_ENTIRE_CAP = 500

# Structured solves
EIGEN_FLOOR = 1e-13
ALPHA_MIN = 1.0
ALPHA_MAX = 2.0

# American put
PIA_TOL = 1e-4
PIA_MAX_ITER = 50
PIA_MAX_HALVINGS = 6
SLOPE_WINDOW_RATIO = 0.05
B0_RATIO = 0.85
X_MAX_FACTOR = 3.0
EXERCISE_TOL = 1e-10
MC_CHUNK = 20_000

# CSV
CSV_FMT = "%.17g"
SCHEMA_VERSION = 1
