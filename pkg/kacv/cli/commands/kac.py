"""Kac command implementation."""

from ...pipeline import StageFactory
from ..base import BaseCommand


class KacCommand(BaseCommand):
    """a_α(q) per field, or the interpolated polynomial when no fields are given."""

    name = 'kac'

    def stages(self):
        if self.args.q:
            return StageFactory.for_command('kac_fields')
        return StageFactory.for_command('kac')

    def header(self, context):
        header = super().header(context)
        header['method'] = context.method
        header['q'] = context.orders or None
        return header
