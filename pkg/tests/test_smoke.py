import genstirling
from genstirling import build_table, cli_main, enumerate_weight


def test_smoke(capsys):
    assert genstirling.__version__
    assert enumerate_weight(4, 2) == build_table(4).entry(4, 2)
    assert cli_main(["value", "--n", "4", "--k", "2", "--profile", "stirling2"]) == 0
    assert capsys.readouterr().out == "7\n"
