"""Exception types raised across the pipeline.

Kept in one module so callers (notably the CLI) can map failure classes to
exit codes without importing half the package.
"""


class PipelineError(Exception):
    """Base class for every error raised by this package."""


# --- raster / PNM ---------------------------------------------------------

class PnmParseError(PipelineError):
    """Malformed PNM input."""


class UnsupportedMagic(PnmParseError):
    """PNM magic number is not one of P2/P3/P5/P6."""


class MaxvalNot255(PnmParseError):
    """PNM maxval other than 255."""


class TruncatedData(PnmParseError):
    """PNM payload holds fewer samples than the header promises."""


class WrongKind(PipelineError):
    """Operation applied to an image of the wrong pixel kind."""


class NoForeground(PipelineError):
    """Binary image has no foreground (255) pixels."""


class OutOfBounds(PipelineError):
    """Bounding box or index falls outside the image."""


class BinaryBilinear(PipelineError):
    """Bilinear resize requested on a binary image."""


# --- imgops ---------------------------------------------------------------

class DegenerateHistogram(PipelineError):
    """Otsu threshold on an image with a single gray value."""


class EvenStructuringElement(PipelineError):
    """Morphology structuring element with an even side length."""


class NoBackground(PipelineError):
    """Distance transform on an image with no background pixels."""


# --- augment --------------------------------------------------------------

class AngleOutOfRange(PipelineError):
    """Rotation angle outside the supported range."""


class ShiftOutOfRange(PipelineError):
    """Width-shift fraction outside [-0.5, 0.5]."""


# --- optimize -------------------------------------------------------------

class NonFiniteObjective(PipelineError):
    """Objective returned NaN or infinity."""


class BoundsInverted(PipelineError):
    """Lower bound exceeds upper bound."""


# --- nn -------------------------------------------------------------------

class ShapeMismatch(PipelineError):
    """Tensor shapes incompatible with the requested operation."""


class NonIntegralOutput(PipelineError):
    """Convolution geometry does not yield integral output dimensions."""


class OddSpatialDims(PipelineError):
    """2x2 max pooling on odd spatial dimensions."""


class EmptyBatch(PipelineError):
    """Loss requested on an empty batch."""


class EmptyDataset(PipelineError):
    """Training requested with an empty train or validation set."""


class DivergedLoss(PipelineError):
    """Training loss became non-finite."""


class WrongImageSize(PipelineError):
    """Prediction input is not a 64x64 binary image."""


class EmptyGrid(PipelineError):
    """Hyperparameter grid with no entries."""


# --- dataset --------------------------------------------------------------

class NonPositiveInput(PipelineError):
    """Mass or height must be strictly positive."""


class ManifestParseError(PipelineError):
    """Malformed manifest CSV; message carries the offending row number."""


class DegenerateRange(PipelineError):
    """BMI normalization range has zero width."""


class EmptySubset(PipelineError):
    """Dataset split produced an empty train/val/test subset."""


# --- eval -----------------------------------------------------------------

class ZeroVariance(PipelineError):
    """Correlation or fit requested on a constant sequence."""


class LengthMismatch(PipelineError):
    """Paired sequences of unequal length."""


class EmptyInput(PipelineError):
    """Metric requested on empty input."""
