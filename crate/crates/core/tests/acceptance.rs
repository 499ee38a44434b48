//! Acceptance suite: one PASS/FAIL line per criterion, exact equality
//! throughout. Runs without the libtest harness so the lines are always shown.

mod common;

use std::process::ExitCode;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sympcoh::acx::{AlmostComplexStructure, PureFull};
use sympcoh::catalog::{self, CatalogEntry};
use sympcoh::cec::LieAlgebra;
use sympcoh::forms::KForm;
use sympcoh::linalg::RationalMatrix;
use sympcoh::morphism::{LieMorphism, Structures, Theory};
use sympcoh::parser::parse_form;
use sympcoh::symplectic::{CohomologyReport, SymplecticStructure};
use sympcoh::Rational;

use common::{o_betti, q, random_form, random_rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn structure(g: &LieAlgebra, omega: &KForm) -> Result<SymplecticStructure, String> {
    SymplecticStructure::new(g.clone(), omega.clone()).map_err(|e| e.to_string())
}

fn report(s: &SymplecticStructure) -> Result<CohomologyReport, String> {
    s.report().map_err(|e| e.to_string())
}

/// Default form plus three sampled invariant symplectic forms.
fn symplectic_forms(e: &CatalogEntry, seed: u64) -> Vec<KForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<KForm> = e.default_omega.iter().cloned().collect();
    for _ in 0..3 {
        if let Some(w) = catalog::sample_symplectic(&e.algebra, &mut rng, 50) {
            out.push(w);
        }
    }
    out
}

/// The λ-family of symplectic forms for each 4-dimensional case, with its nondegeneracy
/// condition.
fn lambda_instance(name: &str, rng: &mut ChaCha8Rng) -> KForm {
    loop {
        let mut l = |_: &str| random_rational(rng);
        let (text, ok) = match name {
            "kodaira" => {
                let (l12, l13, l23, l24, l34) = (l("12"), l("13"), l("23"), l("24"), l("34"));
                let ok = &l12 * &l34 + &l13 * &l24 != q(0);
                (format!("{l12}*12+{l13}*13+{l23}*23+{l24}*24+{l34}*34"), ok)
            }
            "g1_g34m" => {
                let (l12, l23, l24, l34) = (l("12"), l("23"), l("24"), l("34"));
                (format!("{l12}*12+{l23}*23+{l24}*24+{l34}*34"), true)
            }
            "g41" => {
                let (l12, l13, l14, l23) = (l("12"), l("13"), l("14"), l("23"));
                (format!("{l12}*12+{l13}*13+{l14}*14+{l23}*23"), true)
            }
            _ => unreachable!(),
        };
        if ok {
            return parse_form(&text.replace("+-", "-"), 4).expect("family parses");
        }
    }
}

fn criterion_1() -> Outcome {
    let expected = [
        ("kodaira", (5, 4, 1)),
        ("g1_g34m", (2, 2, 0)),
        ("g41", (4, 2, 2)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x4_6);
    for (name, want) in expected {
        let e = catalog::get(name).map_err(|x| x.to_string())?;
        let mut forms = vec![e.default_omega.clone().expect("4-dim entries carry omega")];
        for _ in 0..3 {
            forms.push(lambda_instance(name, &mut rng));
        }
        for w in &forms {
            let r = report(&structure(&e.algebra, w)?)?;
            let row = r.row(2);
            let got = (row.h_bc, row.b, row.delta_tilde);
            ensure!(
                got == want,
                "{name} with omega = {w}: got {got:?}, want {want:?}"
            );
        }
    }
    Ok(
        "kodaira (5,4,1), g1_g34m (2,2,0), g41 (4,2,2) at default and 3 lambda-instances each"
            .into(),
    )
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for e in catalog::entries() {
        for w in symplectic_forms(&e, 2) {
            let r = report(&structure(&e.algebra, &w)?)?;
            ensure!(
                r.row(1).delta_tilde == 0,
                "{}: delta_tilde^1 = {} for {w}",
                e.name,
                r.row(1).delta_tilde
            );
            checked += 1;
        }
    }
    Ok(format!("delta_tilde^1 = 0 for {checked} (entry, omega) pairs; etabeta5 has no invariant symplectic form"))
}

fn criterion_3() -> Outcome {
    let mut hlc_names = Vec::new();
    for e in catalog::entries()
        .into_iter()
        .filter(|e| e.algebra.dim() == 4)
    {
        let w = e.default_omega.clone().expect("4-dim entries carry omega");
        let r = report(&structure(&e.algebra, &w)?)?;
        ensure!(
            r.hlc == (r.row(2).delta_tilde == 0),
            "{}: HLC and delta_tilde^2 disagree",
            e.name
        );
        if r.hlc {
            hlc_names.push(e.name);
        }
    }
    hlc_names.sort();
    let want = vec!["g1_g34m", "hyperelliptic", "torus4"];
    ensure!(
        hlc_names == want,
        "HLC entries {hlc_names:?}, want {want:?}"
    );
    Ok("HLC <=> delta_tilde^2 = 0; HLC exactly for g1_g34m, hyperelliptic, torus4".into())
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for e in catalog::entries() {
        for w in symplectic_forms(&e, 4) {
            let r = report(&structure(&e.algebra, &w)?)?;
            let top = r.dim;
            for k in 0..=top {
                let (a, b) = (r.row(k), r.row(top - k));
                ensure!(
                    a.h_bc == b.h_bc && a.h_bc == a.h_a && a.h_a == b.h_a,
                    "{} k={k}: h_bc {} / {}, h_a {} / {}",
                    e.name,
                    a.h_bc,
                    b.h_bc,
                    a.h_a,
                    b.h_a
                );
            }
            checked += 1;
        }
    }
    Ok(format!(
        "h_BC^k = h_BC^(2n-k) = h_A^k = h_A^(2n-k) for {checked} (entry, omega) pairs"
    ))
}

fn projection() -> RationalMatrix {
    let mut p = RationalMatrix::zeros(8, 10);
    for i in 0..8 {
        p.set(i, i, q(1));
    }
    p
}

fn criterion_5() -> Outcome {
    let eta = catalog::get("etabeta5").map_err(|e| e.to_string())?;
    let torus = catalog::get("torus8").map_err(|e| e.to_string())?;
    let acs = |e: &CatalogEntry| {
        AlmostComplexStructure::new(e.algebra.clone(), e.default_j.clone().expect("J"))
            .map_err(|x| x.to_string())
    };
    let (je, jt) = (acs(&eta)?, acs(&torus)?);
    let dims = |a: &AlmostComplexStructure| -> Result<(usize, usize), String> {
        Ok((
            a.h_j(1, 1).map_err(|e| e.to_string())?.dim,
            a.h_j(2, 0).map_err(|e| e.to_string())?.dim,
        ))
    };
    ensure!(
        dims(&je)? == (16, 10),
        "etabeta5 (h11, h20) = {:?}",
        dims(&je)?
    );
    ensure!(
        dims(&jt)? == (16, 12),
        "torus8 (h11, h20) = {:?}",
        dims(&jt)?
    );
    let f = LieMorphism::new(eta.algebra.clone(), torus.algebra.clone(), projection())
        .map_err(|e| e.to_string())?;
    let s = Structures {
        target_j: Some(&jt),
        source_j: Some(&je),
        ..Default::default()
    };
    let j20 = f
        .induced_report(Theory::PureType { p: 2, q: 0 }, 2, &s)
        .map_err(|e| e.to_string())?;
    ensure!(
        j20.rank() == 10 && j20.domain_dim() == 12 && !j20.injective(),
        "H^(2,0),(0,2) pullback: {j20}"
    );
    let dr = f
        .induced_report(Theory::DeRham, 1, &s)
        .map_err(|e| e.to_string())?;
    ensure!(dr.injective() && dr.rank() == 8, "H^1 pullback: {dr}");
    Ok(format!(
        "etabeta5 (16,10), torus8 (16,12); {j20}, kernel 2; {dr}"
    ))
}

fn criterion_6() -> Outcome {
    const SAMPLES: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut total = 0;
    for e in catalog::entries() {
        let n = e.algebra.dim();
        let s = match &e.default_omega {
            Some(w) => Some(structure(&e.algebra, w)?),
            None => None,
        };
        for i in 0..SAMPLES {
            let k = i % (n + 1);
            let a = random_form(&mut rng, n, k, 4);
            let d = |f: &KForm| e.algebra.differential(f).map_err(|x| x.to_string());
            ensure!(d(&d(&a)?)?.is_zero(), "{}: d^2 {a} != 0", e.name);
            let Some(s) = &s else { continue };
            let dl = |f: &KForm| s.d_lambda(f).map_err(|x| x.to_string());
            let star = |f: &KForm| s.star(f).map_err(|x| x.to_string());
            let lam = |f: &KForm| s.lambda(f).map_err(|x| x.to_string());
            let lef = |f: &KForm| s.lefschetz(f).map_err(|x| x.to_string());
            ensure!(
                k < 2 || dl(&dl(&a)?)?.is_zero(),
                "{}: (d^L)^2 {a} != 0",
                e.name
            );
            if k >= 1 {
                let lhs = d(&dl(&a)?)?;
                let rhs = dl(&d(&a)?)?;
                ensure!(lhs == -&rhs, "{}: dd^L != -d^Ld on {a}", e.name);
            }
            let comm = difference(&lam(&lef(&a)?)?, &lef(&lam(&a)?)?);
            let scaled = a.scale(&Rational::from_integer((n as i64 / 2 - k as i64).into()));
            ensure!(
                comm == scaled || (comm.is_zero() && scaled.is_zero()),
                "{}: [Lambda,L] on {a} gave {comm}",
                e.name
            );
            ensure!(star(&star(&a)?)? == a, "{}: star star {a} != id", e.name);
            if k >= 1 {
                let via_star = star(&d(&star(&a)?)?)?;
                let signed = if (k + 1) % 2 == 0 {
                    via_star
                } else {
                    -&via_star
                };
                ensure!(
                    dl(&a)? == signed,
                    "{}: d^L != (-1)^(k+1) *d* on {a}",
                    e.name
                );
            }
            total += 1;
        }
    }
    Ok(format!(
        "{SAMPLES} random forms per entry; all six identities on {total} symplectic samples"
    ))
}

/// `a - b`, where a zero operand of the wrong degree (from `Λ` below
/// degree 2) counts as zero.
fn difference(a: &KForm, b: &KForm) -> KForm {
    if b.is_zero() {
        a.clone()
    } else if a.is_zero() {
        -b
    } else {
        a - b
    }
}

fn criterion_7() -> Outcome {
    for e in catalog::entries() {
        let Some(j) = e.default_j.clone() else {
            continue;
        };
        if e.algebra.dim() != 4 && e.name != "etabeta5" {
            continue;
        }
        let a = AlmostComplexStructure::new(e.algebra.clone(), j).map_err(|x| x.to_string())?;
        let h11 = a.h_j(1, 1).map_err(|x| x.to_string())?.dim;
        let h20 = a.h_j(2, 0).map_err(|x| x.to_string())?.dim;
        let b2 = o_betti(&e.algebra)[2];
        ensure!(h11 + h20 == b2, "{}: {h11} + {h20} != b2 = {b2}", e.name);
        let v = a.pure_full_check().map_err(|x| x.to_string())?;
        ensure!(
            v == PureFull {
                pure: true,
                full: true
            },
            "{}: {v:?}",
            e.name
        );
        if e.name == "etabeta5" {
            ensure!(b2 == 26, "etabeta5 b2 = {b2}");
        }
    }
    Ok("all 4-dim entries and etabeta5 (16 + 10 = 26) are pure and full".into())
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for e in catalog::entries() {
        for w in symplectic_forms(&e, 8) {
            let r = report(&structure(&e.algebra, &w)?)?;
            let flags = [
                r.ddlambda_lemma,
                r.bc_to_dr_injective(),
                r.bc_to_dr_surjective(),
                r.hlc,
            ];
            ensure!(
                flags.iter().all(|&f| f == flags[0]),
                "{} with {w}: (delta, inj, surj, hlc) = {flags:?}",
                e.name
            );
            if let Some(want) = e.expects_hlc {
                ensure!(r.hlc == want, "{}: HLC {} expected {want}", e.name, r.hlc);
            }
            checked += 1;
        }
    }
    Ok(format!(
        "four flags agree on {checked} (entry, omega) pairs"
    ))
}

/// Non-identity diagonal automorphisms `e_i ↦ t_i e_i`, `t_i ∈ {1,2,3}`.
fn scalings(g: &LieAlgebra, limit: usize) -> Vec<LieMorphism> {
    let n = g.dim();
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        // odometer increment
        let mut i = 0;
        while i < n && digits[i] == 2 {
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        digits[i] += 1;
        let factors: Vec<Rational> = digits.iter().map(|&d| q(d as i64 + 1)).collect();
        if let Ok(f) = LieMorphism::scaling(g.clone(), &factors) {
            out.push(f);
            if out.len() == limit {
                break;
            }
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for e in catalog::entries() {
        let Some(omega) = &e.default_omega else {
            continue;
        };
        let target = structure(&e.algebra, omega)?;
        for f in scalings(&e.algebra, 3) {
            ensure!(f.is_invertible(), "scaling not invertible");
            let tilde = f.pullback(omega).map_err(|x| x.to_string())?;
            let source = structure(&e.algebra, &tilde)?;
            ensure!(
                f.check_pullback_symplectic(omega, &tilde)
                    .map_err(|x| x.to_string())?,
                "pullback mismatch"
            );
            let s = Structures {
                target_omega: Some(&target),
                source_omega: Some(&source),
                ..Default::default()
            };
            let lemma = report(&source)?.ddlambda_lemma;
            for k in 0..=e.algebra.dim() {
                let dr = f
                    .induced_report(Theory::DeRham, k, &s)
                    .map_err(|x| x.to_string())?;
                ensure!(dr.injective(), "{} deRham k={k}: {dr}", e.name);
                if lemma {
                    let bc = f
                        .induced_report(Theory::BottChern, k, &s)
                        .map_err(|x| x.to_string())?;
                    ensure!(bc.injective(), "{} BottChern k={k}: {bc}", e.name);
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} diagonal automorphisms injective on deRham (and Bott-Chern when the lemma holds)"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "symplectic Bott-Chern table of the 4-dim families",
            criterion_1,
        ),
        ("delta_tilde^1 vanishes", criterion_2),
        ("HLC <=> delta_tilde^2 = 0 in dimension 4", criterion_3),
        ("Bott-Chern/Aeppli duality", criterion_4),
        (
            "etabeta5 pure-type counts and non-injective pullback",
            criterion_5,
        ),
        ("operator identities on random forms", criterion_6),
        ("C-infinity pure and full", criterion_7),
        ("natural-map equivalences", criterion_8),
        ("injectivity along automorphisms", criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let outcome =
            std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
