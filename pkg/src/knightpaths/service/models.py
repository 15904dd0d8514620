"""Pydantic request/response models for the enumeration service.

Counts travel as decimal strings everywhere: the knight tables leave the
range of native JSON numbers well inside desk scale.
"""

from __future__ import annotations

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class PathClassName(str, Enum):
    knight = "knight"
    zigzag = "zigzag"


class MeasureName(str, Enum):
    size = "size"
    length = "length"


class CountMethod(str, Enum):
    dp = "dp"
    closed = "closed"
    brute = "brute"
    all = "all"


class GeneratingFunctionName(str, Enum):
    A = "A"  # knight paths on the axis, by size
    A1 = "A1"  # partial knight paths ending at height 1, by size
    E = "E"  # knight paths on the axis, by length
    r_size = "r-size"  # small kernel root, size measure
    r_length = "r-length"  # small kernel root, length measure
    axis_size = "axis-size"  # zigzag paths on the axis, by size
    axis_length = "axis-length"  # zigzag paths on the axis, by length
    total_size = "total-size"  # all partial zigzag paths, by size
    total_length = "total-length"  # all partial zigzag paths, by length


class BijectionName(str, Enum):
    psi = "psi"
    psi_inv = "psi-inv"
    phi = "phi"
    phi_inv = "phi-inv"


class SuiteName(str, Enum):
    oracle = "oracle"
    closed = "closed"
    series = "series"
    bijections = "bijections"
    all = "all"


class OeisOutcome(str, Enum):
    match = "match"
    mismatch = "mismatch"
    fetch_error = "fetch-error"


class CountRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    path_class: PathClassName = Field(alias="class")
    measure: MeasureName
    value: int = Field(ge=0, le=512)
    height: int = Field(ge=0)
    method: CountMethod = CountMethod.dp


class CountResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    path_class: PathClassName = Field(alias="class")
    measure: MeasureName
    n: int
    k: int
    count: str
    method: CountMethod
    engines: Optional[Dict[str, str]] = None
    agreement: Optional[bool] = None


class ListRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    path_class: PathClassName = Field(alias="class")
    measure: MeasureName
    value: int = Field(ge=0, le=128)
    height: int = Field(ge=0)
    force: bool = False


class ListResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    path_class: PathClassName = Field(alias="class")
    measure: MeasureName
    n: int
    k: int
    count: int
    words: List[str]


class SeriesRequest(BaseModel):
    gf: GeneratingFunctionName
    order: int = Field(default=20, ge=0, le=200)


class SeriesResponse(BaseModel):
    gf: GeneratingFunctionName
    order: int
    text: str
    coefficients: List[str]


class MapRequest(BaseModel):
    bijection: BijectionName
    word: str


class MapResponse(BaseModel):
    bijection: BijectionName
    input: str
    image: str


class VerifyRequest(BaseModel):
    suite: SuiteName = SuiteName.all
    max_value: Optional[int] = Field(default=None, ge=0, le=12)


class CheckReport(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    suite: SuiteName
    passed: bool
    failures: int
    checks: List[CheckReport]


class OeisRequest(BaseModel):
    id: str = Field(pattern=r"^A\d{6}$")
    max_terms: Optional[int] = Field(default=None, ge=1)
    fetch: bool = False
    cache_dir: Optional[str] = None


class OeisResponse(BaseModel):
    id: str
    outcome: OeisOutcome
    compared: int = 0
    source: str = ""
    what: str = ""
    mismatch_index: Optional[int] = None
    expected: Optional[str] = None
    computed: Optional[str] = None
    detail: str = ""
