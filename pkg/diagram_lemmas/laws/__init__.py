from .axioms import AX1, AX2, AX3, AX4, AX5, GAL
from .check import LAWS, check_axioms, short_laws
from .fixtures import oracle_fixture, table_fixture, vector_fixture
from .law_strategy import Law_Fixture, Law_Strategy, show
from .lemmas import LA, LA1, LB, LB1, LB2, LC, RML
from .oracle import ORC
