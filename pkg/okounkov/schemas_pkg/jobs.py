from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from okounkov.config import settings


class JobMode(str, Enum):
    TORIC = "toric"
    SURFACE = "surface"
    SEMIGROUP = "semigroup"
    SESHADRI = "seshadri"
    CHECK = "check"


class JobConfig(BaseModel):
    mode: JobMode
    input_path: Optional[Path] = None
    output_dir: Path = Field(default_factory=lambda: Path(settings.OUTPUT_DIR))
    k_max: Optional[int] = Field(default=None, ge=1)
    emit_svg: bool = False
    points: Optional[List[int]] = None
    curves: Optional[str] = None  # "delpezzo" or a JSON file with curve classes
    checks: List[str] = []

    @model_validator(mode="after")
    def check_required(self):
        if self.mode != JobMode.CHECK and self.input_path is None:
            raise ValueError(f"mode {self.mode.value} needs an input file")
        if self.mode not in (JobMode.TORIC, JobMode.SESHADRI) and self.points is not None:
            raise ValueError("points are only read in toric and seshadri modes")
        return self
