"""Acceptance runs over the bundled quiver catalog."""

from pathlib import Path

import pytest
import numpy as np
from kacv.cli import main
from kacv.cli.main import EXIT_ERROR, EXIT_PASS
from kacv.config import KacConfig
from kacv.fields.galois import field_for_order
from kacv.io import load_quiver_file
from kacv.moment import MomentEquation, moment_fiber_count

CATALOG = Path(__file__).resolve().parents[2] / 'data' / 'quivers'
A2 = str(CATALOG / 'a2.quiver')
A3 = str(CATALOG / 'a3.quiver')
D4 = str(CATALOG / 'd4.quiver')
K2 = str(CATALOG / 'k2.quiver')
K3 = str(CATALOG / 'k3.quiver')


class TestAffineD4:
    """Test cases for the affine D4 star."""

    def test_real_root(self, capsys):
        """Test that a real root has a_α = 1 = r_α."""
        code = main(['verify', D4, '--dim', 'e', '--check', 'conjB'])
        out = capsys.readouterr().out
        assert code == EXIT_PASS
        assert 'expected=1 actual=1 status=PASS' in out

    def test_bad_prime_fields(self, capsys):
        """Test that δ is indivisible but its generic weight is bad at 2 and 3."""
        code = main(['kac', D4, '--dim', 'delta', '--q', '2,3'])
        out = capsys.readouterr().out
        assert code == EXIT_PASS
        assert 'weight=-' in out.splitlines()[0]
        assert 'check=method_agreement q=2 direct=6 moment=- reason=bad_prime_2 status=SKIP' in out
        assert 'check=method_agreement q=3 direct=7 moment=- reason=bad_prime_3 status=SKIP' in out

    @pytest.mark.slow
    def test_method_agreement_first_admissible_prime(self, capsys):
        """Test direct = moment = 11 for δ at q = 7."""
        code = main(['kac', D4, '--dim', 'delta', '--q', '7'])
        out = capsys.readouterr().out
        assert code == EXIT_PASS
        assert 'check=method_agreement q=7 direct=11 moment=11 status=PASS' in out

    @pytest.mark.slow
    def test_imaginary_root_polynomial(self, capsys):
        """Test a_δ(q) = q + 4 from Burnside samples."""
        code = main(['kac', D4, '--dim', 'delta'])
        out = capsys.readouterr().out
        assert code == EXIT_PASS
        assert 'coefficients=4,1' in out

    @pytest.mark.slow
    def test_multiplicity_of_delta(self, capsys):
        """Test r_δ = 4 in the multiplicity table."""
        code = main(['mult', D4, '--dim', 'delta'])
        out = capsys.readouterr().out
        assert code == EXIT_PASS
        assert 'check=multiplicity beta=2,1,1,1,1 r=4' in out
        assert 'check=pbw_oracle box=2,1,1,1,1 mismatches=0 status=PASS' in out


class TestKronecker:
    """Test cases for Kronecker dimension vectors."""

    def test_conj_b_indivisible(self, capsys):
        """Test conjB for the real roots (1,2) and (2,1)."""
        for label in ('d12', 'd21'):
            assert main(['verify', K2, '--dim', label, '--check', 'conjB',
                         '--preset', 'quick']) == EXIT_PASS
            assert 'status=PASS' in capsys.readouterr().out

    def test_conj_b_divisible(self):
        """Test that (2,2) is refused by conjB."""
        assert main(['verify', K2, '--dim', 'd22', '--check', 'conjB']) == EXIT_ERROR

    def test_hn_identities(self, capsys):
        """Test the m-value identity and the exhaustive HN sweeps."""
        code = main(['verify', K2, '--dim', 'd', '--check', 'hn'])
        out = capsys.readouterr().out
        assert code == EXIT_PASS
        assert 'check=m_identity dim=1,1 theta=-1,1 m_recursive=1 m_closed=1 r=1 status=PASS' in out


class TestCatalogAgreement:
    """Test cases run across several catalog entries."""

    @pytest.mark.parametrize('path,label,q,expected', [
        (A2, 'd', 2, 1),
        (A2, 'd', 3, 1),
        (A3, 'd', 3, 1),
        (K2, 'd', 3, 4),
        (K2, 'd12', 3, 1),
        (K3, 'd', 2, 7),
    ])
    def test_method_agreement(self, capsys, path, label, q, expected):
        """Test direct = moment at an admissible prime."""
        code = main(['kac', path, '--dim', label, '--q', str(q)])
        out = capsys.readouterr().out
        assert code == EXIT_PASS
        assert f'check=method_agreement q={q} direct={expected} moment={expected} status=PASS' in out

    @pytest.mark.parametrize('path,label,orders,expected', [
        (A2, 'd', '2,3', {2: 1, 3: 1}),
        (K2, 'd', '2,3,5', {2: 6, 3: 12, 5: 30}),
    ])
    def test_appendix_identity(self, capsys, path, label, orders, expected):
        """Test #X_λ = #X_s on the doubled quiver."""
        code = main(['verify', path, '--dim', label, '--check', 'appendix', '--q', orders])
        out = capsys.readouterr().out
        assert code == EXIT_PASS
        for q, points in expected.items():
            assert f'check=appendix q={q} weight=1,-1 x={points} xs={points} status=PASS' in out

    @pytest.mark.parametrize('path,q,sizes', [
        (A2, 2, (2, 4)),
        (A2, 3, (3, 9)),
        (K2, 2, (4, 16)),
        (K2, 3, (9, 81)),
    ])
    def test_hn_sweep(self, capsys, path, q, sizes):
        """Test HN uniqueness, Hom vanishing and King/slope over Q and its double."""
        code = main(['verify', path, '--dim', 'd', '--check', 'hn', '--q', str(q)])
        out = capsys.readouterr().out
        assert code == EXIT_PASS
        assert 'status=FAIL' not in out
        for label, reps in zip(('Q', 'Q_double'), sizes):
            assert f'check=hn_unique quiver={label} q={q} reps={reps} failures=0 status=PASS' in out
            assert f'check=king_slope quiver={label} q={q} reps={reps} failures=0 status=PASS' in out
            assert f'check=hom_vanishing quiver={label} q={q}' in out

    @pytest.mark.parametrize('path,label', [
        (A2, 'd'),
        (A3, 'd'),
        (K2, 'd'),
        (K2, 'd12'),
        (K3, 'd'),
        (D4, 'e'),
    ])
    def test_trace_incompatible_fibers_are_empty(self, path, label):
        """Test that Σ λ_i α_i ≠ 0 in F_q leaves μ^{-1}(λ) empty."""
        quiver_file = load_quiver_file(path)
        alpha = quiver_file.dim(label)
        config = KacConfig.quick()
        rng = np.random.default_rng(sum(alpha))
        checked = 0
        while checked < 20:
            field = field_for_order(int(rng.choice([2, 3, 4])))
            target = tuple(int(t) for t in rng.integers(0, field.q, size=len(alpha)))
            equation = MomentEquation(quiver_file.quiver, alpha, target)
            if equation.is_trace_compatible(field):
                continue
            assert moment_fiber_count(equation, field, config) == 0
            checked += 1


if __name__ == '__main__':
    pytest.main([__file__])
