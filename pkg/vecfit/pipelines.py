import json

from itemadapter import ItemAdapter

from vecfit.log import get_logger

logger = get_logger(__name__)

REPORT_FIELDS = ('iteration', 'active_keyframes', 'mse', 'spatial', 'g1', 'sdf', 'total')


class LossLogPipeline:
    """Grava um LossReport por linha (JSON lines) durante o ajuste."""

    def __init__(self, path=None, extra_fields=False):
        self.path = path
        self.extra_fields = extra_fields
        self.file = None
        self.count = 0

    def open_fit(self, fit_name):
        logger.info(f"Iniciando ajuste: {fit_name}. Registro de perdas em {self.path or '(desativado)'}")
        if self.path:
            self.file = open(self.path, 'w', encoding='utf-8')

    def process_report(self, report):
        """Serializa o relatório; sem arquivo configurado apenas conta."""
        adapter = ItemAdapter(report)
        record = {name: adapter.get(name) for name in REPORT_FIELDS}
        if self.extra_fields:
            record['grad_norms'] = adapter.get('grad_norms')
            record['softness'] = adapter.get('softness')
        if self.file:
            try:
                self.file.write(json.dumps(record) + '\n')
            except OSError as e:
                logger.error(f"Erro ao gravar relatório de perda: {e}", exc_info=True)
                raise
        self.count += 1
        return report

    def close_fit(self, fit_name):
        if self.file:
            self.file.close()
            self.file = None
        logger.info(f"Ajuste {fit_name} finalizado: {self.count} iterações registradas.")
