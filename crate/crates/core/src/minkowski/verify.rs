//! Checks of the linear relations between f-vectors of a sum, its faces and
//! its summands. All sums run over nonempty faces and are exact.

use super::decompose::{delta_vector, is_relatively_general_position, SumDecomposition};
use super::MinkowskiSum;
use crate::error::{PolysumError, Result};
use crate::exact::{format_rat, rat_int, Rat};
use crate::polytope::{char_poly, sign, CharPoly, FVector, Polytope};
use crate::report::VerifierReport;

fn f_delta_top(ms: &MinkowskiSum, sd: &SumDecomposition) -> Result<Vec<i64>> {
    let top = ms.sum().lattice().top();
    Ok(delta_vector(ms, sd, top)?.entries)
}

/// `sum_{k<d} (-1)^k (k + a) f^δ_k(P)`.
fn weighted_delta_sum(delta: &[i64], d: usize, a: &Rat) -> Rat {
    (0..d).fold(rat_int(0), |acc, k| acc + sign(k as i64) * (rat_int(k as i64) + a) * rat_int(delta[k]))
}

fn advisory(ms: &MinkowskiSum, sd: &SumDecomposition, need_full_dim: bool) -> Option<String> {
    let mut notes = Vec::new();
    if !is_relatively_general_position(sd) {
        notes.push("summands are not relatively in general position".to_string());
    }
    if need_full_dim {
        let low: Vec<String> = ms
            .summands()
            .iter()
            .enumerate()
            .filter(|(_, p)| p.dim() != ms.dim())
            .map(|(i, p)| format!("summand {i} has dim {}", p.dim()))
            .collect();
        notes.extend(low);
    }
    (!notes.is_empty()).then(|| notes.join("; "))
}

fn delta_diag(delta: &[i64], d: usize) -> String {
    let shown: Vec<String> = delta[..d].iter().map(i64::to_string).collect();
    format!("f_delta(P) = ({})", shown.join(", "))
}

/// `sum_{k=0}^{d-1} (-1)^k k f^δ_k(P) = 0` for full-dimensional summands in
/// relative general position.
pub fn verify_mainthm(ms: &MinkowskiSum, sd: &SumDecomposition) -> Result<VerifierReport> {
    let d = ms.dim();
    let delta = f_delta_top(ms, sd)?;
    let lhs = weighted_delta_sum(&delta, d, &rat_int(0));
    Ok(VerifierReport::new("mainthm", lhs, rat_int(0))
        .with_advisory(advisory(ms, sd, true))
        .with_diagnostics(vec![delta_diag(&delta, d)]))
}

/// `sum (-1)^k (k + a) f^δ_k(P) = a (1 - r) (1 - (-1)^d)`.
pub fn verify_maincor(ms: &MinkowskiSum, sd: &SumDecomposition, a: &Rat) -> Result<VerifierReport> {
    let d = ms.dim();
    let r = ms.num_summands() as i64;
    let delta = f_delta_top(ms, sd)?;
    let lhs = weighted_delta_sum(&delta, d, a);
    let rhs = a * rat_int(1 - r) * (rat_int(1) - sign(d as i64));
    Ok(VerifierReport::new("maincor", lhs, rhs)
        .with_advisory(advisory(ms, sd, true))
        .with_diagnostics(vec![delta_diag(&delta, d), format!("a = {}", format_rat(a))]))
}

/// `sum (-1)^k k f^δ_k(P) = (-1)^{d+1} sum_{dim P_i < d} dim P_i`.
pub fn verify_maincor2(ms: &MinkowskiSum, sd: &SumDecomposition) -> Result<VerifierReport> {
    let d = ms.dim();
    let delta = f_delta_top(ms, sd)?;
    let lhs = weighted_delta_sum(&delta, d, &rat_int(0));
    let low: i64 = ms.summands().iter().map(Polytope::dim).filter(|&k| k < d).map(|k| k as i64).sum();
    let rhs = sign(d as i64 + 1) * rat_int(low);
    Ok(VerifierReport::new("maincor2", lhs, rhs)
        .with_advisory(advisory(ms, sd, false))
        .with_diagnostics(vec![delta_diag(&delta, d), format!("sum of low summand dims = {low}")]))
}

/// `sum_{F ⊆ P} (-1)^{d - dim F} f^δ_k(F) = -(-1)^{d-k} #{i : dim P_i = k}`.
pub fn verify_thm_delta(ms: &MinkowskiSum, sd: &SumDecomposition, k: usize) -> Result<VerifierReport> {
    let d = ms.dim();
    if k >= d {
        return Err(PolysumError::OutOfRange(format!("k = {k} must be below d = {d}")));
    }
    let mut lhs = rat_int(0);
    for e in sd.iter() {
        let delta = delta_vector(ms, sd, e.face)?;
        lhs += sign(d as i64 - e.dim as i64) * rat_int(delta.get(k));
    }
    let count = ms.summands().iter().filter(|p| p.dim() == k).count() as i64;
    let rhs = -sign(d as i64 - k as i64) * rat_int(count);
    Ok(VerifierReport::new(format!("delta[k={k}]"), lhs, rhs)
        .with_diagnostics(vec![format!("{count} summands of dim {k}")]))
}

/// For an exactly decomposed face: its generating polynomial is the product
/// of its parts' polynomials, and `sum_k (-1)^k k f^δ_k(F) = -p_δ'(-1) = 0`.
pub fn verify_lemface(ms: &MinkowskiSum, sd: &SumDecomposition, face: usize) -> Result<VerifierReport> {
    let e = sd.get(face).ok_or(PolysumError::FaceOutOfRange(face))?;
    if !e.exact {
        return Err(PolysumError::InexactFace(face));
    }
    let poly_of = |p: &Polytope, idx: usize| {
        let counts = p.face_counts(idx);
        let dim = counts.len() - 1;
        char_poly(&FVector::new(dim, counts[..dim].to_vec()))
    };
    let p_face = poly_of(ms.sum(), face);
    let parts: Vec<CharPoly> = ms.summands().iter().zip(&e.parts).map(|(p, &i)| poly_of(p, i)).collect();
    let product = parts.iter().fold(CharPoly::one(), |acc, q| acc.mul(q));
    let mismatch: i64 = {
        let diff = p_face.sub(&product);
        diff.coeffs().iter().map(|c| if c == &0.into() { 0 } else { 1 }).sum()
    };
    let product_check = VerifierReport::new("lemface.product", rat_int(mismatch), rat_int(0))
        .with_diagnostics(vec![format!("p = {p_face}; prod p_i = {product}")]);

    let delta = delta_vector(ms, sd, face)?;
    let lhs = delta
        .entries
        .iter()
        .enumerate()
        .fold(rat_int(0), |acc, (k, &v)| acc + sign(k as i64) * rat_int(k as i64 * v));
    let p_delta = parts.iter().fold(p_face.clone(), |acc, q| acc.sub(q));
    let via_derivative = -p_delta.derivative().eval(&rat_int(-1));
    let derivative_check = VerifierReport::new("lemface.alternating", lhs.clone(), rat_int(0))
        .with_diagnostics(vec![format!("p_delta = {p_delta}; -p_delta'(-1) = {}", format_rat(&via_derivative))]);
    let consistent = VerifierReport::new("lemface.derivative", lhs, via_derivative);

    let parts = [product_check, derivative_check, consistent];
    let mut report = VerifierReport::aggregate(format!("lemface[face={face}]"), &parts);
    report.diagnostics = parts.iter().map(VerifierReport::summary).chain(parts.iter().flat_map(|p| p.diagnostics.clone())).collect();
    Ok(report)
}

/// `sum_{F ⊆ P} (-1)^{d - dim F} f_k(F) = 0` for `k < d`, over the nonempty
/// faces of a single polytope.
pub fn verify_lem_euler(p: &Polytope, k: usize) -> Result<VerifierReport> {
    let d = p.dim();
    if k >= d {
        return Err(PolysumError::OutOfRange(format!("k = {k} must be below d = {d}")));
    }
    let l = p.lattice();
    let lhs = (1..l.len()).fold(rat_int(0), |acc, i| {
        let f = l.face(i);
        let fk = p.face_counts(i).get(k).copied().unwrap_or(0);
        acc + sign(d as i64 - f.dim as i64) * rat_int(fk as i64)
    });
    Ok(VerifierReport::new(format!("lem_euler[k={k}]"), lhs, rat_int(0)))
}

/// `sum_{F ⊆ P} (-1)^{d - dim F} f_k(t_i(F)) = (-1)^{d - dim P_i} [k = dim P_i]`.
/// `summand` is zero-based.
pub fn verify_lem_summand(ms: &MinkowskiSum, sd: &SumDecomposition, summand: usize, k: usize) -> Result<VerifierReport> {
    let d = ms.dim();
    if summand >= ms.num_summands() {
        return Err(PolysumError::OutOfRange(format!("summand {summand} of {}", ms.num_summands())));
    }
    if k >= d {
        return Err(PolysumError::OutOfRange(format!("k = {k} must be below d = {d}")));
    }
    let p = ms.summand(summand);
    let lhs = sd.iter().fold(rat_int(0), |acc, e| {
        let fk = p.face_counts(e.parts[summand]).get(k).copied().unwrap_or(0);
        acc + sign(d as i64 - e.dim as i64) * rat_int(fk as i64)
    });
    let di = p.dim();
    let rhs = if k == di { sign(d as i64 - di as i64) } else { rat_int(0) };
    Ok(VerifierReport::new(format!("lem_summand[i={summand},k={k}]"), lhs, rhs))
}
