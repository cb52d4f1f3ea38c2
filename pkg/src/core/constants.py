# Constants for better maintainability
class Constants:
    CMD_EVOLVE = "evolve"
    CMD_YOUNG = "young"
    CMD_INVARIANTS = "invariants"
    CMD_SPECTRUM = "spectrum"
    CMD_CYCLE = "cycle"
    CMD_TODA = "toda"
    CMD_VERIFY = "verify"
    CMD_SERVE = "serve"

    SUITE_COMBINATORICS = "combinatorics"
    SUITE_EVOLUTION = "evolution"
    SUITE_INVARIANTS = "invariants"
    SUITE_RENKON = "renkon"
    SUITE_TODA = "toda"
    SUITE_PERIODS = "periods"
    SUITE_SIGMA = "sigma"
    SUITE_XI = "xi"

    FORMAT_JSON = "json"
    FORMAT_ASCII = "ascii"

    BALL = "1"
    EMPTY = "0"

    # Three solitons on L = 29, Young rows (7, 4, 1)
    GRAPH_EXAMPLE = "11111000100111111" + "0" * 12


SUITES = [
    Constants.SUITE_COMBINATORICS,
    Constants.SUITE_EVOLUTION,
    Constants.SUITE_INVARIANTS,
    Constants.SUITE_RENKON,
    Constants.SUITE_TODA,
    Constants.SUITE_PERIODS,
    Constants.SUITE_SIGMA,
    Constants.SUITE_XI,
]
