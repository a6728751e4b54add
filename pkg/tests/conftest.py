import pytest

PREC = 30  # default working precision: 30 integer q-steps


@pytest.fixture(scope="session")
def w_prime():
    from cubicforms.fqm import w_prime_form

    return w_prime_form()


@pytest.fixture(scope="session")
def e5(w_prime):
    from cubicforms.eisenstein import vv_eisenstein

    return vv_eisenstein(w_prime, 5, PREC)


@pytest.fixture(scope="session")
def basis30():
    from cubicforms.vvmf import basis_weight11

    return basis_weight11(PREC)


@pytest.fixture(scope="session")
def psi30():
    from cubicforms.vvmf import solve_psi

    return solve_psi(PREC)


@pytest.fixture(scope="session")
def heegner30(psi30):
    from cubicforms.vvmf import assemble_theta

    return assemble_theta(psi30)
