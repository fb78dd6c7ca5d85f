#!/usr/bin/env python
# package import and public names

def test_import():
    success = False
    try:
        import unruhtrap
        success = True
    except ImportError:
        pass
    assert(success)


def test_public_api():
    import unruhtrap
    for name in ('IonChain', 'ChirpProfile', 'DetectorProbe', 'red_probability',
                 'blue_probability', 'finite_chirp_probability', 'sideband_ratio',
                 'perturbative_probability', 'evolve_schrodinger', 'gamma'):
        assert hasattr(unruhtrap, name)
    assert unruhtrap.__version__ == '0.1.0'
