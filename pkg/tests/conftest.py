from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from symcert.polycore import Polynomial

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def coefficients():
    return st.one_of(st.integers(-9, 9),
                     st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)))


def polynomials(n, max_exp=3, max_terms=5):
    monos = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.dictionaries(monos, coefficients(), max_size=max_terms).map(
        lambda d: Polynomial(n, d))


def homogeneous_polynomials(n, degree, max_terms=4):
    def compositions(d, k):
        if k == 1:
            return st.just((d,))
        return st.integers(0, d).flatmap(
            lambda first: compositions(d - first, k - 1).map(lambda rest: (first,) + rest))
    return st.dictionaries(compositions(degree, n), coefficients(), min_size=1,
                           max_size=max_terms).map(lambda d: Polynomial(n, d))


# --- acceptance report ------------------------------------------------------

ACCEPTANCE = {}


def record_criterion(number, title, passed, detail=""):
    """Store one criterion outcome; a later FAIL for the same criterion wins."""
    prev = ACCEPTANCE.get(number)
    ok = passed and (prev is None or prev[1])
    parts = [d for d in ((prev[2] if prev else ""), detail) if d]
    ACCEPTANCE[number] = (title, ok, "; ".join(parts))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
