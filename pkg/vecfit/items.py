from dataclasses import dataclass, field

from vecfit import settings


@dataclass
class ShapeItem:
    """Atributos crus de um elemento de forma do SVG, antes da canonicalização."""

    tag: str = None
    element_id: str = None
    d: str = None
    x: float = None
    y: float = None
    width: float = None
    height: float = None
    rx: float = None
    ry: float = None
    cx: float = None
    cy: float = None
    r: float = None
    x1: float = None
    y1: float = None
    x2: float = None
    y2: float = None
    points: list = None
    fill: str = None
    stroke: str = None
    stroke_width: float = None
    fill_rule: str = None
    opacity: float = None
    fill_opacity: float = None
    transform: str = None
    data_index: int = None
    data_fill: str = None
    data_original: str = None


@dataclass
class LossWeights:
    lambda_mse: float = settings.LAMBDA_MSE
    lambda_spatial: float = settings.LAMBDA_SPATIAL
    lambda_g1: float = settings.LAMBDA_G1
    lambda_sdf: float = settings.LAMBDA_SDF


@dataclass
class FitConfig:
    """Todos os parâmetros ajustáveis do ajuste; padrões em vecfit.settings."""

    resolution: int = settings.RESOLUTION
    keyframes: int = settings.KEYFRAMES
    iterations: int = settings.ITERATIONS
    activation_cadence: int = settings.ACTIVATION_CADENCE
    lr_homography: float = settings.LR_HOMOGRAPHY
    lr_offsets: float = settings.LR_OFFSETS
    adam_beta1: float = settings.ADAM_BETA1
    adam_beta2: float = settings.ADAM_BETA2
    adam_eps: float = settings.ADAM_EPS
    weights: LossWeights = field(default_factory=LossWeights)
    softness: float = settings.SOFTNESS
    final_softness: float = settings.FINAL_SOFTNESS
    sharpen_fraction: float = settings.SHARPEN_FRACTION
    white_thresh: float = settings.WHITE_THRESH
    seed: int = settings.SHUFFLE_SEED
    sdf_tau: float = settings.SDF_TAU
    recolor: bool = True
    initializer: str = "probe"
    progressive: bool = True
    checkpoint_every: int = settings.CHECKPOINT_EVERY
    strict_parse: bool = True
    exclude_fills: list = field(default_factory=list)
    flatten_tol: float = settings.FLATTEN_TOL
    probe_radius_fraction: float = settings.PROBE_RADIUS_FRACTION
    probe_stride: int = settings.PROBE_STRIDE
    occlusion_eps: float = settings.OCCLUSION_EPS
    threads: int = None


@dataclass
class LossReport:
    iteration: int = 0
    active_keyframes: list = field(default_factory=list)
    mse: float = 0.0
    spatial: float = 0.0
    g1: float = 0.0
    sdf: float = 0.0
    total: float = 0.0
    grad_norms: dict = field(default_factory=dict)
    softness: float = settings.SOFTNESS


@dataclass
class EvalReport:
    mse: list = field(default_factory=list)
    iou: list = field(default_factory=list)
    translation_error: dict = field(default_factory=dict)
    rotation_error: dict = field(default_factory=dict)
    wall_clock: float = None
    iterations_per_second: float = None


@dataclass
class GroupProgram:
    """Programa de movimento de um grupo: amplitudes atingidas no último keyframe."""

    group_id: str = None
    tx: float = 0.0
    ty: float = 0.0
    rotation_deg: float = 0.0
    log_scale: float = 0.0
    shape: str = "ramp"


@dataclass
class OffsetProgram:
    """Curvatura senoidal aplicada aos pontos de controle de um caminho."""

    path_index: int = None
    amplitude: float = 0.0
    cycles: float = 1.0


@dataclass
class SyntheticSpec:
    groups: list = field(default_factory=list)
    paths: list = field(default_factory=list)
    noise: float = 0.0
    resolution: int = 128
    keyframes: int = 8
    seed: int = 0
