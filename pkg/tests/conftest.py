"""Shared fixtures: the convergence battery covering all six limit cases.

Each battery entry is (name, descriptor, target, should_converge); the
positive entries realize every case of the limit classification and the
negative controls pair each family with a wrong target that keeps the
witness distance bounded away from zero.
"""
import pytest

from orbitc import (CharacterOrbit, GenericOrbit, IntermediateOrbit,
                    SequenceDescriptor)

K = 10000


def _seq(**kw):
    kw.setdefault('K', K)
    return SequenceDescriptor(**kw)


def build_battery():
    """(name, descriptor, target, is_limit) covering the six cases."""
    entries = []

    # case 1: generic -> generic (alpha_k -> alpha != 0, lambda fixed)
    s = _seq(n=2, kind='generic',
             alpha={'rule': 'harmonic', 'c': 1.0, 'offset': 0.5},
             lam={'head': (1,), 'tail': {'rule': 'const', 'c': 0}})
    entries.append(('generic/n2', s, GenericOrbit((1, 0), 0.5), True))
    entries.append(('generic/n2-wrong-lam', s, GenericOrbit((2, 0), 0.5),
                    False))
    entries.append(('generic/n2-wrong-alpha', s, GenericOrbit((1, 0), 1.5),
                    False))

    # case 2(i): generic -> intermediate, alpha_k -> 0+
    s = _seq(n=2, kind='generic',
             alpha={'rule': 'harmonic', 'c': 0.5},
             lam={'head': (0,), 'tail': {'rule': 'linked', 'c': -0.5}})
    entries.append(('inter+/n2', s, IntermediateOrbit((0,), 1.0), True))
    entries.append(('inter+/n2-wrong-mu', s, IntermediateOrbit((1,), 1.0),
                    False))
    entries.append(('inter+/n2-wrong-r', s, IntermediateOrbit((0,), 2.0),
                    False))
    s = _seq(n=3, kind='generic',
             alpha={'rule': 'harmonic', 'c': 0.5},
             lam={'head': (2, 1), 'tail': {'rule': 'linked', 'c': -2.0}})
    entries.append(('inter+/n3', s, IntermediateOrbit((2, 1), 2.0), True))

    # case 2(ii): generic -> intermediate, alpha_k -> 0-
    s = _seq(n=2, kind='generic',
             alpha={'rule': 'harmonic', 'c': -0.5},
             lam={'head': (0,), 'tail': {'rule': 'linked', 'c': -0.5}})
    entries.append(('inter-/n2', s, IntermediateOrbit((0,), 1.0), True))

    # case 3 bounded: generic -> character with lambda eventually constant
    s = _seq(n=2, kind='generic',
             alpha={'rule': 'power', 'c': 0.5, 'p': 2.0},
             lam={'head': (2,), 'tail': {'rule': 'const', 'c': 0}})
    entries.append(('char-bdd/n2', s, CharacterOrbit((2, 1)), True))
    entries.append(('char-bdd/n2-top', s, CharacterOrbit((3, 0)), True))
    s3 = _seq(n=3, kind='generic',
              alpha={'rule': 'power', 'c': -0.5, 'p': 2.0},
              lam={'head': (2, 0), 'tail': {'rule': 'const', 'c': 3}})
    entries.append(('char-bdd/n3-neg', s3, CharacterOrbit((2, 1, 0)), True))

    # case 3 unbounded: moving entry escapes while alpha_k lambda^k -> 0
    s = _seq(n=2, kind='generic',
             alpha={'rule': 'power', 'c': 1.0, 'p': 3.0},
             lam={'head': (1,), 'tail': {'rule': 'linear', 'c': -1}})
    entries.append(('char-unb+/n2', s, CharacterOrbit((2, 0)), True))
    s = _seq(n=2, kind='generic',
             alpha={'rule': 'power', 'c': -1.0, 'p': 3.0},
             lam={'head': (1,), 'tail': {'rule': 'linear', 'c': 1,
                                         'offset': 1}})
    entries.append(('char-unb-/n2', s, CharacterOrbit((2, 0)), True))

    # case 4: intermediate -> intermediate (r_k -> r > 0)
    s = _seq(n=2, kind='intermediate',
             mu={'rule': 'const', 'values': [1]},
             r={'rule': 'harmonic', 'c': 1.0, 'offset': 1.0})
    entries.append(('ii/n2', s, IntermediateOrbit((1,), 1.0), True))
    entries.append(('ii/n2-wrong-mu', s, IntermediateOrbit((0,), 1.0),
                    False))

    # case 5: intermediate -> character (r_k -> 0)
    s = _seq(n=2, kind='intermediate',
             mu={'rule': 'const', 'values': [1]},
             r={'rule': 'harmonic', 'c': 1.0})
    entries.append(('ic/n2', s, CharacterOrbit((2, 1)), True))
    entries.append(('ic/n2-interior', s, CharacterOrbit((1, 1)), True))
    s = _seq(n=3, kind='intermediate',
             mu={'rule': 'const', 'values': [2, 0]},
             r={'rule': 'power', 'c': 1.0, 'p': 1.5})
    entries.append(('ic/n3', s, CharacterOrbit((3, 1, 0)), True))

    # case 6: character -> character (eventually constant)
    s = _seq(n=2, kind='character', lam={'rule': 'const', 'values': [2, -1]})
    entries.append(('cc/n2', s, CharacterOrbit((2, -1)), True))
    entries.append(('cc/n2-wrong', s, CharacterOrbit((2, 0)), False))

    return entries


@pytest.fixture(scope='session')
def battery():
    return build_battery()
