"""Verify command implementation."""

from ...pipeline import StageFactory
from ..base import BaseCommand


class VerifyCommand(BaseCommand):
    """Conjectures A and B, the appendix identity and the HN identities."""

    name = 'verify'

    def stages(self):
        return StageFactory.for_checks([self.args.check])

    def header(self, context):
        header = super().header(context)
        header['check'] = self.args.check
        header['q'] = context.orders or None
        return header
