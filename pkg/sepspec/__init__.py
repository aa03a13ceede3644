__name__ = "sepspec"
__version__ = "0.1.dev0"
__author__ = "sepspec developers"
__author_email__ = "sepspec-dev@users.noreply.github.com"
__description__ = (
    "sepspec is an open-source Python library for the spectral analysis of "
    "general separable sample covariance matrices and high-dimensional "
    "white noise testing."
)
