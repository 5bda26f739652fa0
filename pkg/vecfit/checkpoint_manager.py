import os

from vecfit.log import get_logger
from vecfit.motion import save_params

logger = get_logger(__name__)


def partial_path(path):
    root, ext = os.path.splitext(path)
    return f"{root}.partial{ext or '.json'}"


class CheckpointManager:
    """Gerencia a gravação do checkpoint de um ajuste num bloco 'with'.

    Saída limpa grava `path`; uma exceção grava `<path>.partial.json` com
    os últimos parâmetros conhecidos e é propagada.
    """

    def __init__(self, path):
        self.path = path
        self.params = None
        self.written = None

    def __enter__(self):
        directory = os.path.dirname(os.path.abspath(self.path))
        os.makedirs(directory, exist_ok=True)
        return self

    def update(self, params):
        self.params = params

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Grava o checkpoint final ou o parcial, conforme o bloco terminou."""
        if self.params is None:
            if exc_type is not None:
                logger.error(f"Ajuste abortado antes de haver parâmetros: {exc_val}", exc_info=True)
            return False
        if exc_type is None:
            save_params(self.path, self.params)
            self.written = self.path
            logger.info(f"Checkpoint gravado em {self.path}")
        else:
            target = partial_path(self.path)
            try:
                save_params(target, self.params)
                self.written = target
            except OSError as e:
                logger.error(f"Erro ao gravar checkpoint parcial: {e}", exc_info=True)
            logger.error(f"Ajuste abortado; checkpoint parcial em {target}: {exc_val}", exc_info=True)
        return False
