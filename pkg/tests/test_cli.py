"""CLI: full command-graph round trips, exit codes, determinism, and
secret-file handling."""

import pytest

from twisted_dihedral.cli import main
from twisted_dihedral.formats import (is_secret_file, read_param_file)


def run(*argv):
    return main([str(a) for a in argv])


@pytest.fixture
def params_file(tmp_path):
    path = tmp_path / "params.txt"
    assert run("param-gen", "--p", 3, "--m", 1, "--n", 3,
               "--out", path, "--seed", 1) == 0
    return path


def test_param_gen_f3_lambda(params_file):
    pp = read_param_file(params_file)
    assert pp.algebra.lam.rep == 2
    text = params_file.read_text()
    assert "p=3" in text and "lambda=2" in text


def test_param_gen_invalid_divisibility(tmp_path, capsys):
    rc = run("param-gen", "--p", 5, "--m", 1, "--n", 3,
             "--out", tmp_path / "x.txt")
    assert rc == 1
    assert "error" in capsys.readouterr().err


def test_full_kem_round_trip(tmp_path, params_file, capsys):
    pk = tmp_path / "pk.txt"
    sk = tmp_path / "sk.txt"
    ct = tmp_path / "ct.txt"
    k1 = tmp_path / "k1.txt"
    k2 = tmp_path / "k2.txt"
    assert run("keygen", "--params", params_file, "--out-pk", pk,
               "--out-sk", sk, "--seed", 2) == 0
    assert run("encaps", "--params", params_file, "--pk", pk,
               "--out-ct", ct, "--out-key", k1, "--seed", 3) == 0
    assert run("decaps", "--params", params_file, "--sk", sk,
               "--ct", ct, "--out-key", k2) == 0
    key1, key2 = k1.read_text().strip(), k2.read_text().strip()
    assert key1 == key2
    assert len(key1) == 64  # 256-bit key as hex


def test_decaps_tampered_ciphertext(tmp_path):
    # larger parameters so the tampered ciphertext cannot collide with a
    # genuine encapsulation (see the KEM tests)
    params = tmp_path / "params9.txt"
    assert run("param-gen", "--p", 3, "--m", 2, "--n", 9,
               "--out", params, "--seed", 1) == 0
    pk, sk = tmp_path / "pk.txt", tmp_path / "sk.txt"
    ct, k1, k2 = tmp_path / "ct.txt", tmp_path / "k1.txt", tmp_path / "k2.txt"
    run("keygen", "--params", params, "--out-pk", pk, "--out-sk", sk,
        "--seed", 2)
    run("encaps", "--params", params, "--pk", pk, "--out-ct", ct,
        "--out-key", k1, "--seed", 3)
    lines = ct.read_text().splitlines()
    body = list(lines[-1])
    # bump the first coefficient of c2 to a different value mod 3
    body[1] = {"0": "1", "1": "2", "2": "0"}[body[1]]
    lines[-1] = "".join(body)
    ct.write_text("\n".join(lines) + "\n")
    # implicit rejection: exit 0, a key is produced, but it differs
    assert run("decaps", "--params", params, "--sk", sk, "--ct", ct,
               "--out-key", k2) == 0
    assert k1.read_text() != k2.read_text()


def test_secret_file_marker_and_show(tmp_path, params_file, capsys):
    pk, sk = tmp_path / "pk.txt", tmp_path / "sk.txt"
    run("keygen", "--params", params_file, "--out-pk", pk, "--out-sk", sk,
        "--seed", 2)
    capsys.readouterr()
    assert is_secret_file(sk)
    assert not is_secret_file(pk)
    run("keygen", "--params", params_file, "--out-pk", pk, "--out-sk", sk,
        "--seed", 2, "--insecure-show")
    out = capsys.readouterr().out
    assert "sk.a" in out and "sk.gamma" in out


def test_keygen_refuses_to_print_secrets_by_default(tmp_path, params_file,
                                                    capsys):
    pk, sk = tmp_path / "pk.txt", tmp_path / "sk.txt"
    run("keygen", "--params", params_file, "--out-pk", pk, "--out-sk", sk,
        "--seed", 2)
    out = capsys.readouterr().out
    assert "sk.a" not in out and "sk.gamma" not in out


def test_kex_demo_agrees(params_file, capsys):
    assert run("kex-demo", "--params", params_file, "--seed", 9) == 0
    out = capsys.readouterr().out
    assert "AGREE" in out
    assert "party=initiator" in out and "party=responder" in out
    assert "sid=" in out and "pk=" in out


def test_cocycle_check_valid(params_file, capsys):
    assert run("cocycle-check", "--params", params_file) == 0
    out = capsys.readouterr().out
    assert "valid" in out
    assert "rotation-pair symmetry" in out
    assert "reflection-pair identity" in out


def test_cocycle_check_beta_invalid(params_file, capsys):
    # ord(2) = 2 does not divide n = 3 over F_3
    assert run("cocycle-check", "--params", params_file,
               "--beta-lambda", "2") == 1
    out = capsys.readouterr().out
    assert "counterexample" in out


def test_attack_exhaustive(tmp_path, params_file, capsys):
    pk, sk = tmp_path / "pk.txt", tmp_path / "sk.txt"
    run("keygen", "--params", params_file, "--out-pk", pk, "--out-sk", sk,
        "--seed", 4)
    capsys.readouterr()
    assert run("attack", "--params", params_file, "--pk", pk,
               "exhaustive") == 0
    out = capsys.readouterr().out
    assert "verification: ok" in out
    assert "candidates tested:" in out


def test_attack_mitm(tmp_path, params_file, capsys):
    pk, sk = tmp_path / "pk.txt", tmp_path / "sk.txt"
    run("keygen", "--params", params_file, "--out-pk", pk, "--out-sk", sk,
        "--seed", 4)
    capsys.readouterr()
    assert run("attack", "--params", params_file, "--pk", pk, "mitm",
               "--t", "1") == 0
    out = capsys.readouterr().out
    assert "offline table entries: 27" in out
    assert "verification: ok" in out


def test_attack_capacity_exit_code(tmp_path, capsys):
    params = tmp_path / "big.txt"
    pk, sk = tmp_path / "pk.txt", tmp_path / "sk.txt"
    assert run("param-gen", "--p", 3, "--m", 1, "--n", 12,
               "--out", params, "--seed", 1) == 0
    assert run("keygen", "--params", params, "--out-pk", pk,
               "--out-sk", sk, "--seed", 2) == 0
    # 3^12 * 3^7 candidates exceed the default bound
    assert run("attack", "--params", params, "--pk", pk, "exhaustive") == 2
    assert "capacity error" in capsys.readouterr().err


def test_usage_errors_exit_1(tmp_path, capsys):
    assert run("param-gen", "--p", 3) == 1          # missing required flags
    assert run("frobnicate") == 1                   # unknown subcommand
    assert run("kex-demo", "--params", tmp_path / "missing.txt") == 1
    capsys.readouterr()


def test_malformed_param_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("p=3\nn=3\n")  # missing lambda and h
    assert run("kex-demo", "--params", bad) == 1
    assert "error" in capsys.readouterr().err


def test_header_mismatch_rejected(tmp_path, capsys):
    p1 = tmp_path / "p1.txt"
    p2 = tmp_path / "p2.txt"
    pk = tmp_path / "pk.txt"
    sk = tmp_path / "sk.txt"
    run("param-gen", "--p", 3, "--m", 1, "--n", 3, "--out", p1, "--seed", 1)
    run("param-gen", "--p", 3, "--m", 1, "--n", 6, "--out", p2, "--seed", 1)
    run("keygen", "--params", p1, "--out-pk", pk, "--out-sk", sk, "--seed", 2)
    capsys.readouterr()
    assert run("encaps", "--params", p2, "--pk", pk,
               "--out-ct", tmp_path / "ct.txt",
               "--out-key", tmp_path / "k.txt", "--seed", 3) == 1
    assert "header mismatch" in capsys.readouterr().err


def test_seeded_determinism(tmp_path, capsys):
    outputs = []
    for run_dir in ("a", "b"):
        d = tmp_path / run_dir
        d.mkdir()
        params, pk, sk = d / "params.txt", d / "pk.txt", d / "sk.txt"
        ct, key = d / "ct.txt", d / "key.txt"
        assert run("param-gen", "--p", 3, "--m", 2, "--n", 9,
                   "--out", params, "--seed", 11) == 0
        assert run("keygen", "--params", params, "--out-pk", pk,
                   "--out-sk", sk, "--seed", 12) == 0
        assert run("encaps", "--params", params, "--pk", pk,
                   "--out-ct", ct, "--out-key", key, "--seed", 13) == 0
        outputs.append(tuple(f.read_bytes() for f in (params, pk, sk, ct, key)))
    capsys.readouterr()
    assert outputs[0] == outputs[1]
