"""Mult command implementation."""

from ...pipeline import StageFactory
from ..base import BaseCommand


class MultCommand(BaseCommand):
    """Root multiplicities and PBW dimensions below the box."""

    name = 'mult'

    def stages(self):
        return StageFactory.for_command('mult')

    def header(self, context):
        return {'file': self.args.file, 'box': context.alpha}
