import pytest

from nmreason.parser import parse_formula, parse_kb

TWEETY_CWA = """\
const tweety, chilly.
pred Bird/1, Flies/1.
fact Flies(tweety).
fact Bird(tweety).
fact Bird(chilly).
"""

# the closed-world inconsistency example: birds fly, but this bird does not
APPENDIX_INCONSISTENT = """\
const tweety.
pred Bird/1, Flies/1, Happy/1.
fact Bird(tweety).
fact -Flies(tweety).
all g: Bird(x) -> Flies(x).
"""

TWEETY_CIRC = """\
const tweety, chilly.
pred Bird/1, Flies/1.
abpred Ab/1.
flag unique-names.
fact Bird(tweety).
fact Bird(chilly).
fact -Flies(chilly).
all g: Bird(x) & -Ab(x) -> Flies(x).
"""

TWEETY_DEFAULT = """\
const tweety, chilly.
pred Bird/1, Flies/1.
fact Bird(tweety).
fact Bird(chilly).
fact -Flies(chilly).
default d1: Bird(x) : Flies(x) / Flies(x).
"""

TWEETY_AEL = """\
const tweety, chilly.
pred Bird/1, Flies/1.
flag unique-names.
fact Bird(tweety).
fact Bird(chilly).
fact -Flies(chilly).
ael a1: Bird(x) & -B(-Flies(x)) -> Flies(x).
"""

TWEETY_DEF = """\
const tweety, chilly.
pred Bird/1, Flies/1.
flag unique-names.
fact Bird(tweety).
fact Bird(chilly).
fact -Flies(chilly).
def g: Bird(x) ~> Flies(x).
"""

PRIMES = """\
const 2, 3, 4, 5, 6, 7, 8, 9.
pred Prime/1, Odd/1.
flag unique-names.
fact Prime(2). fact Prime(3). fact Prime(5). fact Prime(7).
fact -Odd(2). fact Odd(3). fact Odd(5). fact Odd(7). fact Odd(9).
def g: Prime(x) ~> Odd(x).
"""

NIXON = """\
const nixon.
pred Quaker/1, Republican/1, Pacifist/1.
fact Quaker(nixon).
fact Republican(nixon).
def g1: Quaker(x) ~> Pacifist(x).
def g2: Republican(x) ~> -Pacifist(x).
"""

NIXON_DEFAULTS = """\
const nixon.
pred Quaker/1, Republican/1, Pacifist/1.
fact Quaker(nixon).
fact Republican(nixon).
default d1: Quaker(x) : Pacifist(x) / Pacifist(x).
default d2: Republican(x) : -Pacifist(x) / -Pacifist(x).
"""

SCHOOL = """\
const eve.
pred Student/1, Salary/1.
fact Student(eve).
all g: Student(x) -> -Salary(x).
"""


@pytest.fixture
def tweety_cwa():
    return parse_kb(TWEETY_CWA)


@pytest.fixture
def tweety_circ():
    return parse_kb(TWEETY_CIRC)


@pytest.fixture
def tweety_default():
    return parse_kb(TWEETY_DEFAULT)


@pytest.fixture
def tweety_ael():
    return parse_kb(TWEETY_AEL)


@pytest.fixture
def tweety_def():
    return parse_kb(TWEETY_DEF)


@pytest.fixture
def primes():
    return parse_kb(PRIMES)


@pytest.fixture
def nixon():
    return parse_kb(NIXON)


def q(text, kb, **kw):
    return parse_formula(text, kb, **kw)
