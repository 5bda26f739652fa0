"""Exceções do vecfit.

Todas derivam de VecfitError; a CLI converte-as em código de saída 2 e,
com --json-errors, imprime to_dict() em stderr.
"""


class VecfitError(Exception):
    """Erro de domínio com detalhes legíveis por máquina."""

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        data = {"error": type(self).__name__, "message": self.message}
        data.update(self.details)
        return data


class UsageError(VecfitError):
    pass


class ConfigError(VecfitError):
    def __init__(self, message, field=None):
        super().__init__(message, field=field)
        self.field = field


class UnsupportedFeature(VecfitError):
    def __init__(self, message, element=None):
        super().__init__(message, element=element)
        self.element = element


class MalformedPath(VecfitError):
    def __init__(self, message, d=None, position=None):
        super().__init__(message, d=d, position=position)


class MissingAssignment(VecfitError):
    def __init__(self, message, path_index=None):
        super().__init__(message, path_index=path_index)
        self.path_index = path_index


class DimensionMismatch(VecfitError):
    def __init__(self, message, expected=None, actual=None):
        super().__init__(message, expected=expected, actual=actual)


class DegenerateProjection(VecfitError):
    def __init__(self, message, point_index=None, w=None):
        super().__init__(message, point_index=point_index, w=w)


class NonFiniteGradient(VecfitError):
    def __init__(self, message, block=None, index=None):
        super().__init__(message, block=block, index=index)
        self.block = block
        self.index = index


class PaletteRequired(VecfitError):
    pass


class FrameIOError(VecfitError):
    def __init__(self, message, path=None):
        super().__init__(message, path=str(path) if path is not None else None)


class MalformedDocument(VecfitError):
    pass
