//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use specht::garnir::{
    eta, eta_formula_mismatches, h_c, relation_space, standard_tabloid, RelationFamily, Straightener,
};
use specht::lanke::{
    appendix_identity_check, brackets, catalanke_verify, eqneta_check, image_phi_is_kernel_alpha,
    jacobi_garnir_bridge, lanke_ambient, phi, psi_phi_vanishes, standard_brackets, CombBracket,
};
use specht::linalg::{subspace_equal, Ambient, ModuleVector, Rational};
use specht::maps::{alpha, polytabloid};
use specht::partition::{binomial, catalan, syt_count, Partition};
use specht::spectrum::eta_spectrum;
use specht::tabloid::{act, canonicalize_column, canonicalize_row, Filling, Permutation};

type Check = Result<String, String>;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn criterion_shapes() -> Vec<Partition> {
    [&[2, 1][..], &[2, 2], &[3, 1], &[2, 2, 1], &[3, 2], &[2, 2, 2], &[3, 2, 1], &[2, 2, 2, 1]]
        .iter()
        .map(|s| p(s))
        .collect()
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn presentation_equivalence() -> Check {
    let shapes = criterion_shapes();
    for shape in &shapes {
        let spaces = RelationFamily::ALL
            .iter()
            .map(|&f| relation_space(shape, f))
            .collect::<Result<Vec<_>, _>>()
            .map_err(e)?;
        for (f, s) in RelationFamily::ALL.iter().zip(&spaces) {
            ensure(s.codim() as u128 == syt_count(shape), || {
                format!("{shape} {f}: codim {} vs f^λ {}", s.codim(), syt_count(shape))
            })?;
            ensure(subspace_equal(&spaces[0], s).map_err(e)?, || {
                format!("{shape}: {f} span differs from full")
            })?;
        }
    }
    Ok(format!("{} shapes, three families each", shapes.len()))
}

fn catalanke() -> Check {
    for n in 2..=5 {
        let r = catalanke_verify(n).map_err(e)?;
        ensure(r.quotient as u128 == catalan(n), || {
            format!("n={n}: quotient {} vs catalan {}", r.quotient, catalan(n))
        })?;
        ensure(r.im_eta_eq_im_phi, || format!("n={n}: im φ ≠ im η"))?;
        ensure(image_phi_is_kernel_alpha(n).map_err(e)?, || format!("n={n}: im φ ≠ ker α"))?;
    }
    Ok("n = 2..5: quotients 2, 5, 14, 42; im φ = im η = ker α".into())
}

fn standard_bracket_basis() -> Check {
    for n in 2..=5 {
        let std = standard_brackets(n).map_err(e)?;
        ensure(std.len() as u128 == catalan(n), || format!("n={n}: {} standard brackets", std.len()))?;
        ensure(catalanke_verify(n).map_err(e)?.standard_basis_ok, || {
            format!("n={n}: standard brackets dependent modulo im φ")
        })?;
    }
    Ok("n = 2..5".into())
}

fn entry_formula() -> Check {
    let mut shapes = 0;
    for n in 1..=7 {
        for m in 1..=n.min(8 - n) {
            let bad = eta_formula_mismatches(n, m).map_err(e)?;
            if let Some((c, r, got, want)) = bad.first() {
                return Err(format!("(n,m)=({n},{m}) entry ({r},{c}): {got} vs {want}"));
            }
            shapes += 1;
        }
    }
    Ok(format!("{shapes} shapes with n+m ≤ 8"))
}

fn spectrum() -> Check {
    let mut recorded = Vec::new();
    for total in 2..=9 {
        for m in 1..=total / 2 {
            let n = total - m;
            let r = eta_spectrum(n, m).map_err(|err| format!("(n,m)=({n},{m}): {err}"))?;
            let mu = Partition::two_column(n, m).map_err(e)?;
            ensure(r.kernel_dim() as u128 == syt_count(&mu), || {
                format!("(n,m)=({n},{m}): nullity {} vs f^µ {}", r.kernel_dim(), syt_count(&mu))
            })?;
            let trace: i64 = r.lines.iter().map(|l| l.eigenvalue * l.multiplicity as i64).sum();
            ensure(trace == (m as u128 * binomial(n + m, n)) as i64, || {
                format!("(n,m)=({n},{m}): trace {trace}")
            })?;
            for l in &r.lines {
                ensure((l.eigenvalue == 0) == (l.component == m), || {
                    format!("(n,m)=({n},{m}): eigenvalue {} on {}", l.eigenvalue, l.shape)
                })?;
            }
            let mut dims: Vec<usize> = r.lines.iter().filter(|l| l.eigenvalue != 0).map(|l| l.component).collect();
            dims.dedup();
            ensure(dims.len() == m, || format!("(n,m)=({n},{m}): nonzero lines not distinct constituents"))?;
            ensure(r.failures().is_empty(), || format!("(n,m)=({n},{m}): {:?}", r.failures()))?;
            if (n, m) == (2, 1) {
                recorded = r.lines.iter().map(|l| format!("{}→{} (closed form {})", l.shape, l.eigenvalue, l.paper_scalar)).collect();
            }
        }
    }
    Ok(format!("n+m ≤ 9; (2,1): {}", recorded.join(", ")))
}

fn bridge() -> Check {
    for n in 2..=4 {
        ensure(jacobi_garnir_bridge(n).map_err(e)?, || format!("n={n}: Ω∘φ ≠ g_(1,n−1)∘Ω"))?;
    }
    Ok("n = 2, 3, 4".into())
}

fn containment_identity() -> Check {
    for n in 2..=5 {
        ensure(eqneta_check(n).map_err(e)?, || format!("n={n}"))?;
    }
    Ok("n = 2..5, plain and relabelled".into())
}

fn appendix() -> Check {
    for n in 2..=4 {
        ensure(appendix_identity_check(n).map_err(e)?, || format!("n={n}: polytabloid identity"))?;
        ensure(psi_phi_vanishes(n).map_err(e)?, || format!("n={n}: Ψ̃∘φ ≠ 0"))?;
    }
    Ok("n = 2, 3, 4".into())
}

fn random_vector(rng: &mut ChaCha8Rng, ambient: &Ambient, terms: usize) -> ModuleVector {
    let dim = ambient.dim();
    let mut v = ModuleVector::zero(ambient.clone());
    for _ in 0..terms {
        let num: i64 = rng.random_range(-5..=5);
        let den: i64 = rng.random_range(1..=3);
        v.add_term(rng.random_range(0..dim), Rational::new(num.into(), den.into()));
    }
    v
}

fn straightening() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut count = 0;
    for shape in criterion_shapes() {
        let ambient = Ambient::Column(shape.clone());
        let straighteners = RelationFamily::ALL
            .iter()
            .map(|&f| Straightener::new(&shape, f))
            .collect::<Result<Vec<_>, _>>()
            .map_err(e)?;
        for _ in 0..100 {
            let terms = rng.random_range(1..=6);
            let v = random_vector(&mut rng, &ambient, terms);
            let target = alpha(&v).map_err(e)?;
            for st in &straighteners {
                let expansion = st.straighten(&v).map_err(e)?;
                let mut sum = ModuleVector::zero(Ambient::Row(shape.clone()));
                for (t, c) in &expansion {
                    sum.add_scaled(&polytabloid(&standard_tabloid(t).to_filling()), c);
                }
                ensure(sum == target, || format!("{shape} {}: α(v) ≠ Σ c ε_t", st.family()))?;
                let defect = st.defect(&v, &expansion);
                ensure(st.relations().contains(&defect).map_err(e)?, || {
                    format!("{shape} {}: defect outside relations", st.family())
                })?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} random vectors, three families each"))
}

fn random_filling(rng: &mut ChaCha8Rng, shape: &Partition) -> Filling {
    let sigma = Permutation::random(shape.size(), rng);
    let mut next = 0;
    let columns = shape
        .column_lengths()
        .iter()
        .map(|&len| {
            let col = (next..next + len).map(|i| sigma.images()[i]).collect();
            next += len;
            col
        })
        .collect();
    Filling::with_shape(shape, columns).unwrap()
}

fn structural_trial(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let pool = [&[2, 1][..], &[3, 1], &[2, 2], &[2, 2, 1], &[3, 2], &[2, 1, 1], &[3, 2, 1], &[2, 2, 2], &[3, 3]];
    let shape = p(pool[rng.random_range(0..pool.len())]);
    let size = shape.size();
    let sigma = Permutation::random(size, rng);
    let tau = Permutation::random(size, rng);
    let col = Ambient::Column(shape.clone());
    let row = Ambient::Row(shape.clone());
    let v = random_vector(rng, &col, 4);
    let w = random_vector(rng, &row, 4);

    for x in [&v, &w] {
        let lhs = act(&sigma.compose(&tau), x).map_err(e)?;
        let rhs = act(&sigma, &act(&tau, x).map_err(e)?).map_err(e)?;
        ensure(lhs == rhs, || format!("{shape}: action law"))?;
        ensure(&act(&Permutation::identity(size), x).map_err(e)? == x, || format!("{shape}: identity"))?;
    }

    let f = random_filling(rng, &shape);
    let canon = canonicalize_column(&f).to_vector();
    ensure(
        canonicalize_column(&f.relabel(&sigma).map_err(e)?).to_vector() == act(&sigma, &canon).map_err(e)?,
        || format!("{shape}: relabel vs act"),
    )?;
    if let Some(c) = f.columns().iter().position(|c| c.len() >= 2) {
        let mut cols = f.columns().to_vec();
        cols[c].swap(0, 1);
        let swapped = Filling::with_shape(&shape, cols).map_err(e)?;
        ensure(canonicalize_column(&swapped).to_vector() == -&canon, || format!("{shape}: antisymmetry"))?;
    }
    let mut rows = f.rows();
    if let Some(r) = rows.iter().position(|r| r.len() >= 2) {
        let before = canonicalize_row(&f);
        rows[r].swap(0, 1);
        let after = canonicalize_row(&Filling::from_rows(rows).map_err(e)?);
        ensure(before == after, || format!("{shape}: row tabloid depends on row order"))?;
    }

    let sv = act(&sigma, &v).map_err(e)?;
    ensure(alpha(&sv).map_err(e)? == act(&sigma, &alpha(&v).map_err(e)?).map_err(e)?, || {
        format!("{shape}: α equivariance")
    })?;
    for c in 1..shape.num_columns() {
        ensure(h_c(&sv, c).map_err(e)? == act(&sigma, &h_c(&v, c).map_err(e)?).map_err(e)?, || {
            format!("{shape}: h_{c} equivariance")
        })?;
    }
    if shape.num_columns() == 2 {
        ensure(eta(&sv).map_err(e)? == act(&sigma, &eta(&v).map_err(e)?).map_err(e)?, || {
            format!("{shape}: η equivariance")
        })?;
    }

    let n = rng.random_range(2..=4);
    let amb = lanke_ambient(n).map_err(e)?;
    let b = random_vector(rng, &amb, 3);
    let rho = Permutation::random(2 * n - 1, rng);
    ensure(phi(&act(&rho, &b).map_err(e)?).map_err(e)? == act(&rho, &phi(&b).map_err(e)?).map_err(e)?, || {
        format!("n={n}: φ equivariance")
    })?;
    Ok(())
}

fn structural() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let trials = 1000;
    let mut failures = Vec::new();
    for i in 0..trials {
        if let Err(msg) = structural_trial(&mut rng) {
            failures.push(format!("trial {i}: {msg}"));
        }
    }
    // brackets are a signed basis: Ω hits every ordered tabloid once
    for n in 2..=5 {
        let all: Vec<CombBracket> = brackets(n).map_err(e)?;
        let dim = lanke_ambient(n).map_err(e)?.dim();
        let mut idx: Vec<usize> = all.iter().map(CombBracket::index).collect();
        idx.sort_unstable();
        idx.dedup();
        if idx.len() != dim {
            failures.push(format!("n={n}: Ω not a bijection"));
        }
    }
    if failures.is_empty() {
        Ok(format!("{trials} randomized trials, 0 failures"))
    } else {
        Err(format!("{} failures; first: {}", failures.len(), failures[0]))
    }
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("presentation equivalence", presentation_equivalence),
        ("CataLAnKe quotient and im φ = im η = ker α", catalanke),
        ("standard-bracket basis", standard_bracket_basis),
        ("η entry formula", entry_formula),
        ("η spectrum", spectrum),
        ("Jacobi–Garnir bridge", bridge),
        ("η(v_T) containment identity", containment_identity),
        ("polytabloid Jacobi identity and Ψ̃∘φ = 0", appendix),
        ("straightening soundness", straightening),
        ("structural properties", structural),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
