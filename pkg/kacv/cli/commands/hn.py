"""HN command implementation."""

from ...pipeline import StageFactory
from ..base import BaseCommand


class HnCommand(BaseCommand):
    """HN-type histogram over every representation of dimension α."""

    name = 'hn'

    def stages(self):
        return StageFactory.for_command('hn')

    def header(self, context):
        header = super().header(context)
        header['double'] = context.double
        header['q'] = context.orders or (2,)
        return header
