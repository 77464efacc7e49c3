"""Unsupervised text line segmentation toolkit.

Pipeline stages: page binarization, self-labeled patch-pair sampling,
siamese embedding training, blob-line detection (sliding-window embedding,
PCA pseudo-RGB, thresholding), graph-cut line extraction, and evaluation
with the two standard region-based metric suites.
"""

__version__ = "0.1.0"

from .errors import (
    ConfigError,
    DetectorError,
    ExtractorError,
    ImagingError,
    LineSegError,
    MetricsError,
    ModelError,
    SamplerError,
)

__all__ = [
    "ConfigError",
    "DetectorError",
    "ExtractorError",
    "ImagingError",
    "LineSegError",
    "MetricsError",
    "ModelError",
    "SamplerError",
    "__version__",
]
