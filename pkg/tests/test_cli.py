import io
import subprocess
import sys

import pytest

from transwords.cli import run
from transwords.transition import TransitionCertificate
from transwords.words import decode


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check():
    assert call("check", "--alpha", "2", "--word", "012021012102") == (0, "power-free: true\n", "")
    code, out, _ = call("check", "--alpha", "2", "--word", "00")
    assert code == 1 and out == "power-free: false\n"
    assert call("--quiet", "check", "--alpha", "2+", "--word", "00")[1] == "true\n"


def test_maxexp():
    code, out, _ = call("maxexp", "--word", "1234123")
    assert code == 0 and out.splitlines()[0] == "7/4 period=4"


def test_generate():
    assert call("generate", "--word", "thue-morse", "--length", "8")[1] == "01101001\n"
    assert call("generate", "--word", "theta", "--length", "6", "--relabel", "0:0,1:1,2:3")[1] == "013031\n"


def test_enumerate():
    assert call("enumerate", "--k", "3", "--alpha", "2", "--length", "5", "--count-only")[1] == "count: 30\n"
    out = call("enumerate", "--k", "3", "--alpha", "2", "--length", "2")[1]
    assert out.splitlines()[:2] == ["01", "02"]


def test_enumerate_cap():
    assert call("enumerate", "--k", "3", "--alpha", "2", "--length", "99")[0] == 3


def test_extendable():
    code, out, _ = call("extendable", "--side", "right", "--k", "3", "--alpha", "2",
                        "--word", "0102010", "--depth", "1")
    assert code == 1 and "status: not-extendable" in out
    code, out, _ = call("extendable", "--side", "left", "--k", "3", "--alpha", "2",
                        "--word", "010", "--depth", "20")
    assert code == 0 and "extendable-to-depth" in out


def test_gamma_check():
    code, out, _ = call("gamma-check", "--k", "3", "--alpha", "2+", "--x", "2", "--t", "thue-morse")
    assert code == 0 and "valid: true" in out
    code, out, _ = call("gamma-check", "--k", "3", "--alpha", "2+", "--x", "2", "--w1", "2",
                        "--t", "thue-morse")
    assert code == 1 and "property 8: false" in out


def test_transition_and_certificate(tmp_path):
    path = tmp_path / "cert.txt"
    code, out, _ = call("transition", "--k", "4", "--alpha", "2", "--u", "01", "--v", "10",
                        "--emit-certificate", str(path))
    assert code == 0 and out.endswith("verified: true\n")
    cert = TransitionCertificate.from_text(path.read_text())
    assert cert.verified and cert.u == (0, 1)


def test_transition_error_codes():
    assert call("transition", "--k", "3", "--alpha", "2", "--u", "0")[0] == 2
    code, _, err = call("transition", "--k", "3", "--alpha", "2+", "--u", "212001200212001200")
    assert code == 1 and "not extendable" in err
    assert call("transition", "--k", "3", "--alpha", "2+", "--u", "000")[0] == 2


def test_oracle():
    assert call("oracle", "--k", "3", "--alpha", "2", "--u", "01", "--v", "01", "--max-len", "4")[1] == "w: 2\n"
    assert call("--quiet", "oracle", "--k", "3", "--alpha", "2", "--u", "0", "--v", "1",
                "--max-len", "4")[1] == "\n"


@pytest.mark.parametrize("argv", [
    ("check", "--alpha", "7/x", "--word", "0"),
    ("check", "--alpha", "2", "--word", "0?"),
    ("generate", "--word", "fib", "--length", "3"),
    ("generate", "--word", "theta", "--length", "3", "--relabel", "0:1,1:1,2:2"),
    ("nonsense",),
])
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == 2


def test_printed_words_reparse():
    out = call("enumerate", "--k", "4", "--alpha", "2", "--length", "3")[1]
    for line in out.splitlines()[:-1]:
        assert len(decode(line, 4)) == 3


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "transwords", "maxexp", "--word", "0110"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("2 period=1")
