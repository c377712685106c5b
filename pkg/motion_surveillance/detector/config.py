from dataclasses import dataclass, field
from typing import Any, Dict

from motion_surveillance.frame_model import Connectivity, Threshold


@dataclass(frozen=True)
class DetectorConfig:
    """Tunable parameters shared by both detection methods.

    None of the defaults are measured values: T=25 is roughly a tenth of the
    intensity range and alpha=0 keeps the reference frame static.
    """

    threshold: Threshold = field(default_factory=Threshold)
    update_alpha: float = 0.0
    min_blob_size: int = 8
    connectivity: Connectivity = Connectivity.EIGHT
    background_frames: int = 1

    def __post_init__(self):
        if not isinstance(self.threshold, Threshold):
            object.__setattr__(self, "threshold", Threshold(self.threshold))
        if not 0.0 <= self.update_alpha <= 1.0:
            raise ValueError("Invalid update_alpha {}, expected a fraction in [0, 1]".format(self.update_alpha))
        if self.min_blob_size < 0:
            raise ValueError("Invalid min_blob_size {}, expected >= 0".format(self.min_blob_size))
        if self.background_frames < 1:
            raise ValueError("Invalid background_frames {}, expected >= 1".format(self.background_frames))
        object.__setattr__(self, "connectivity", Connectivity(self.connectivity))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "threshold": self.threshold.value,
            "update_alpha": self.update_alpha,
            "min_blob_size": self.min_blob_size,
            "connectivity": int(self.connectivity),
            "background_frames": self.background_frames,
        }
