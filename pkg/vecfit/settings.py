# Configurações do projeto vecfit
#
# Valores padrão do ajuste de animação. Os valores de FitConfig vêm daqui;
# um arquivo JSON passado em --config sobrescreve campo a campo.

PROJECT_NAME = "vecfit"

# Resolução e orçamento de otimização
RESOLUTION = 256
KEYFRAMES = 15
ITERATIONS = 2000
ACTIVATION_CADENCE = 100

# Adam
LR_HOMOGRAPHY = 1e-3
LR_OFFSETS = 1e-1
ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.9
ADAM_EPS = 1e-6

# Pesos da função de perda
LAMBDA_MSE = 1000.0
LAMBDA_SPATIAL = 0.5
LAMBDA_G1 = 10.0
LAMBDA_SDF = 1.0

# Rasterização suave (pixels)
SOFTNESS = 0.7
FINAL_SOFTNESS = 0.35
SHARPEN_FRACTION = 0.1
EXPORT_SOFTNESS = 0.25
BLUR_RADIUS = 2
FLATTEN_TOL = 0.1
EXPORT_FLATTEN_TOL = 0.01

# Máscaras e regularização
WHITE_THRESH = 0.98
SDF_TAU = 0.0
SPATIAL_SIGMA_FRACTION = 0.01
G1_ANGLE_DEG = 10.0

# Paleta
PACKING_K_MAX = 64
SHUFFLE_SEED = 0

# Inicialização por sonda de translação
PROBE_RADIUS_FRACTION = 0.1
PROBE_STRIDE = 2

# Reordenação de camadas
OCCLUSION_EPS = 0.05

# Checkpoints e exportação
CHECKPOINT_EVERY = 50
EXPORT_SIZE = 720
KEYFRAMES_PER_SECOND = 5.0
COORD_DECIMALS = 4

# Variável de ambiente para o número de threads (1 = modo determinístico)
THREADS_ENV = "VECFIT_THREADS"

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_LEVEL = "INFO"
