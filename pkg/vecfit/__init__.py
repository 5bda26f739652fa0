"""vecfit: ajusta a geometria vetorial de um SVG estático a um vídeo alvo."""

__version__ = "0.1.0"
