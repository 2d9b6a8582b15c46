"""Constants shared by the CLI commands."""
EXIT_NUMERICAL = 1
EXIT_USAGE = 2

SPECTRUM_KEYS = ("example", "mode", "sizes", "eps_outlier", "seed")
PRECOND_KEYS = ("example", "sizes", "tol", "maxit", "eps_cluster", "seed")
FDE1D_KEYS = ("alphas", "sizes", "precond", "tol", "dense_cap", "workers", "spectra")
FDE2D_KEYS = ("example", "alphas", "beta", "sizes", "precond", "tol", "dense_cap", "workers", "spectra")
PUT_KEYS = (
    "rate", "volatility", "strike", "horizon", "dx", "dt", "b0_ratio", "pia_tol", "max_iter",
    "adjusted", "mc", "paths", "mc_dt_ratio", "seed", "workers",
)
