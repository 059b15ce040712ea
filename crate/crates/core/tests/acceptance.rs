//! Acceptance runner: one PASS/FAIL line per criterion. All comparisons are
//! exact integer equality; the time limits apply to this (test-profile) build.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::test_runner::{Config, TestRunner};
use qtheta::partitions::{enumerate_oracle, table, table_q, OracleKind};
use qtheta::recurrences::{q_via_recurrence, term_count};
use qtheta::verifier::{
    check_conjecture, verify_identity, verify_inequality_family, verify_parity, ConjectureId, FamilyId,
    IdentityId, IdentityParams, ParityId, Strictness,
};
use qtheta::{FunctionName, RecurrenceKind};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Option<u64>);

fn oracle_equivalence() -> Check {
    let mut pairs = vec![
        (FunctionName::P, OracleKind::P),
        (FunctionName::Q, OracleKind::Q),
        (FunctionName::QR(2), OracleKind::QR(2)),
        (FunctionName::QR(3), OracleKind::QR(3)),
        (FunctionName::Overpartition, OracleKind::Overpartition),
        (FunctionName::Pod, OracleKind::Pod),
    ];
    for k in 1..=3 {
        pairs.push((FunctionName::MK(k), OracleKind::MK(k)));
        pairs.push((FunctionName::MPK(k), OracleKind::MPK(k)));
    }
    for (name, oracle) in &pairs {
        let t = table(*name, 40).map_err(|e| e.to_string())?;
        for n in 0..=40u64 {
            let brute = enumerate_oracle(*oracle, n).map_err(|e| e.to_string())?;
            if t.get(n as i64) != &BigInt::from(brute) {
                return Err(format!("{name} differs at n={n}"));
            }
        }
    }
    Ok(format!("{} tables, n <= 40", pairs.len()))
}

fn identity_suite() -> Check {
    let mut count = 0;
    for &id in IdentityId::ALL {
        let ks: Vec<Option<usize>> = if id.uses_k() { (1..=5).map(Some).collect() } else { vec![None] };
        let rs: Vec<Option<usize>> = if id.uses_r() { (1..=3).map(Some).collect() } else { vec![None] };
        for &k in &ks {
            for &r in &rs {
                let rep = verify_identity(id, IdentityParams { k, r }, 300).map_err(|e| e.to_string())?;
                if !rep.passed() {
                    return Err(format!("{id} k={k:?} r={r:?}: {:?}", rep.mismatch));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} checks at order 300"))
}

fn recurrence_equivalence() -> Check {
    let q = table_q(2000);
    for kind in RecurrenceKind::ALL {
        if q_via_recurrence(kind, 2000) != q {
            return Err(format!("{kind} differs"));
        }
    }
    Ok("6 kinds, n <= 2000".into())
}

fn term_counts() -> Check {
    let n = 10_000f64;
    let expected = [
        (RecurrenceKind::Rec1, (4.0 * n / 3.0).sqrt()),
        (RecurrenceKind::Rec2, n.sqrt()),
        (RecurrenceKind::Rec3, (n / 2.0).sqrt()),
        (RecurrenceKind::Rec4, (n / 3.0).sqrt()),
    ];
    let mut parts = Vec::new();
    for (kind, approx) in expected {
        let ratio = term_count(kind, n as u64) as f64 / approx;
        parts.push(format!("{kind}={ratio:.3}"));
        if !(0.8..=1.2).contains(&ratio) {
            return Err(parts.join(" "));
        }
    }
    Ok(parts.join(" "))
}

fn inequality_families() -> Check {
    for &id in FamilyId::ALL {
        let rep = verify_inequality_family(id, 5, 1000).map_err(|e| e.to_string())?;
        if let Some(v) = rep.violations.first() {
            return Err(format!("{id}: sign violation {v:?}"));
        }
        let iff = (1..=5).any(|k| matches!(id.strictness(k), Strictness::IfAndOnlyIf(_)));
        if let (true, Some(b)) = (iff, rep.boundary_mismatches.first()) {
            return Err(format!("{id}: boundary mismatch {b:?}"));
        }
    }
    Ok(format!("{} families, k <= 5, n <= 1000", FamilyId::ALL.len()))
}

fn parity_corollaries() -> Check {
    for &id in ParityId::ALL {
        let rep = verify_parity(id, 10_000).map_err(|e| e.to_string())?;
        if let Some(v) = rep.violations.first() {
            return Err(format!("{id}: {v:?}"));
        }
    }
    Ok("6 corollaries, n <= 10^4".into())
}

fn conjecture_evidence() -> Check {
    let plan = [
        (ConjectureId::Conj1, 4),
        (ConjectureId::Conj2, 4),
        (ConjectureId::Conj41, 5),
        (ConjectureId::Conj42, 5),
    ];
    for (id, k_max) in plan {
        let rep = check_conjecture(id, k_max, 500).map_err(|e| e.to_string())?;
        if let Some(v) = rep.violations.first() {
            return Err(format!("{id}: counterexample {v:?}"));
        }
        let status = Command::new(env!("CARGO_BIN_EXE_qtheta"))
            .args(["conjecture", "--id", id.as_str(), "--kmax", &k_max.to_string(), "--nmax", "500"])
            .output()
            .map_err(|e| e.to_string())?
            .status;
        if status.code() != Some(0) {
            return Err(format!("{id}: subcommand exited with {status}"));
        }
    }
    Ok("CONJ1/CONJ2 k <= 4, CONJ41/CONJ42 k <= 5, n <= 500".into())
}

fn property_suite() -> Check {
    let runner = || TestRunner::new(Config { cases: common::CASES, failure_persistence: None, ..Config::default() });
    runner().run(&common::triple(), common::ring_axioms).map_err(|e| format!("ring axioms: {e}"))?;
    runner().run(&common::unit(), common::invert_roundtrip).map_err(|e| format!("invert: {e}"))?;
    runner().run(&(0usize..160), common::pentagonal_support).map_err(|e| format!("pentagonal: {e}"))?;
    runner()
        .run(&common::gaussian_args(), |(n, k, s)| common::gaussian_symmetry(n, k, s))
        .map_err(|e| format!("gaussian: {e}"))?;
    Ok(format!("4 properties x {} cases", common::CASES))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("oracle equivalence", oracle_equivalence, Some(30)),
        ("identity suite", identity_suite, Some(120)),
        ("recurrence equivalence", recurrence_equivalence, Some(10)),
        ("term-count ratios", term_counts, None),
        ("inequality families", inequality_families, Some(60)),
        ("parity corollaries", parity_corollaries, Some(30)),
        ("conjecture evidence", conjecture_evidence, None),
        ("series property suite", property_suite, None),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let limit = limit.map(Duration::from_secs);
        let (ok, detail) = match (result, limit) {
            (Ok(d), Some(l)) if elapsed > l => (false, format!("{d}; too slow, limit {}s", l.as_secs())),
            (Ok(d), _) => (true, d),
            (Err(e), _) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {}: {name} [{:.2}s] {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
