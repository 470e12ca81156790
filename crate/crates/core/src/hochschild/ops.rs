use alloc::vec;
use alloc::vec::Vec;

use super::{Cochain, HochError, Mono};
use crate::algebra::Algebra;
use crate::exactla::Scalar;

/// Calls `f` with every strictly increasing `k`-subset of `0..n`.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut pos: Vec<usize> = (0..k).collect();
    loop {
        f(&pos);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pos[i] < n - k + i {
                pos[i] += 1;
                for j in i + 1..k {
                    pos[j] = pos[j - 1] + 1;
                }
                break;
            }
        }
    }
}

struct Arg<'a> {
    odd: bool,
    /// Terms grouped by output: `(inputs, coefficient, Σ sp(inputs))`.
    by_output: Vec<Vec<(&'a [usize], &'a Scalar, bool)>>,
}

fn index_args<'a>(a: &Algebra, args: &[&'a Cochain]) -> Vec<Arg<'a>> {
    args.iter()
        .map(|c| {
            let mut by_output = vec![Vec::new(); a.dim()];
            for (m, v) in c.terms() {
                let sp = m.inputs().iter().fold(false, |p, &i| p ^ a.sp(i));
                by_output[m.output()].push((m.inputs(), v, sp));
            }
            Arg { odd: c.is_odd(), by_output }
        })
        .collect()
}

/// The brace φ{ψ₁..ψ_k} restricted to insertion patterns accepted by
/// `allow`. Each ψ_j passing entries of total shifted parity `e` picks up
/// (−1)^{|ψ_j|·e}.
pub(crate) fn brace_with(
    a: &Algebra,
    phi: &Cochain,
    args: &[&Cochain],
    full: bool,
    allow: impl Fn(&[usize]) -> bool,
) -> Cochain {
    let odd = args.iter().fold(phi.is_odd(), |p, c| p ^ c.is_odd());
    let mut out = Cochain::zero_tagged(phi.tag(), odd);
    let k = args.len();
    let idx = index_args(a, args);
    let unit = a.unit();
    for (m, v) in phi.terms() {
        let ins = m.inputs();
        for_each_combination(ins.len(), k, |pos| {
            if !allow(pos) {
                return;
            }
            // Partial results: (tuple, coefficient, parity of the prefix).
            let mut partial: Vec<(Vec<usize>, Scalar, bool)> = vec![(Vec::new(), v.clone(), false)];
            let mut next = 0usize;
            for (slot, &x) in ins.iter().enumerate() {
                if next < k && pos[next] == slot {
                    let arg = &idx[next];
                    let mut grown = Vec::new();
                    for (t, c, pre) in &partial {
                        for (js, w, jsp) in &arg.by_output[x] {
                            let mut nt = t.clone();
                            nt.extend_from_slice(js);
                            grown.push((nt, (c * w).signed(arg.odd && *pre), pre ^ jsp));
                        }
                    }
                    partial = grown;
                    next += 1;
                    if partial.is_empty() {
                        return;
                    }
                } else {
                    let sp = a.sp(x);
                    for (t, _, pre) in partial.iter_mut() {
                        t.push(x);
                        *pre ^= sp;
                    }
                }
            }
            for (t, c, _) in partial {
                if !full && t.contains(&unit) {
                    continue;
                }
                out.add_term(Mono::new(t, m.output()), &c);
            }
        });
    }
    out
}

pub(crate) fn brace_raw(a: &Algebra, phi: &Cochain, args: &[&Cochain]) -> Cochain {
    brace_with(a, phi, args, false, |_| true)
}

/// The brace on the full domain (unit inputs kept); used for the A∞ check.
pub(crate) fn brace_full(a: &Algebra, phi: &Cochain, args: &[&Cochain]) -> Cochain {
    brace_with(a, phi, args, true, |_| true)
}

/// Brace where the first `j` arguments go into slots `< g` and the rest
/// into slots `>= g`.
pub(crate) fn brace_split(a: &Algebra, phi: &Cochain, args: &[&Cochain], g: usize, j: usize) -> Cochain {
    brace_with(a, phi, args, false, |pos| pos.iter().enumerate().all(|(i, &p)| (i < j) == (p < g)))
}

fn check_tags(a: &Algebra, cs: &[&Cochain]) -> Result<(), HochError> {
    if cs.iter().all(|c| c.tag() == a.tag()) {
        Ok(())
    } else {
        Err(HochError::AlgebraMismatch)
    }
}

/// φ{ψ₁,…,ψ_k}, summed over order-preserving insertions into Ā-slots.
pub fn brace(a: &Algebra, phi: &Cochain, args: &[&Cochain]) -> Result<Cochain, HochError> {
    check_tags(a, &[phi])?;
    check_tags(a, args)?;
    Ok(brace_raw(a, phi, args))
}

/// The graded cup product
/// (φ∪ψ)(a₁…a_{p+q}) = (−1)^{|ψ|·(|a₁|+⋯+|a_p|)} m₂(φ(a₁…a_p), ψ(a_{p+1}…))
/// with unshifted degrees; for general A∞ input the A∞ cup m{φ,ψ} with the
/// same normalization. On weight-0 inputs this is the product of A.
pub fn cup(a: &Algebra, phi: &Cochain, psi: &Cochain) -> Result<Cochain, HochError> {
    check_tags(a, &[phi, psi])?;
    Ok(cup_raw(a, phi, psi))
}

/// In shifted terms: φ_p ∪ ψ = (−1)^{|φ|+1+(|ψ|+1)p} m{φ_p, ψ}.
pub(crate) fn cup_raw(a: &Algebra, phi: &Cochain, psi: &Cochain) -> Cochain {
    let mut out = Cochain::zero_tagged(phi.tag(), !(phi.is_odd() ^ psi.is_odd()));
    for p in phi.weights() {
        let part = brace_raw(a, a.structure(), &[&phi.component(p), psi]);
        let flip = !phi.is_odd() ^ (!psi.is_odd() && p % 2 == 1);
        out = out.add_scaled(&Scalar::sign(flip), &part).expect("same parity");
    }
    out
}

/// [φ,ψ] = φ{ψ} − (−1)^{|φ||ψ|} ψ{φ} with shifted parities.
pub fn gerstenhaber(a: &Algebra, phi: &Cochain, psi: &Cochain) -> Result<Cochain, HochError> {
    check_tags(a, &[phi, psi])?;
    Ok(bracket_raw(a, phi, psi))
}

pub(crate) fn bracket_raw(a: &Algebra, phi: &Cochain, psi: &Cochain) -> Cochain {
    let x = brace_raw(a, phi, &[psi]);
    let y = brace_raw(a, psi, &[phi]);
    let s = Scalar::sign(!(phi.is_odd() && psi.is_odd()));
    x.add_scaled(&s, &y).expect("brace results share tag and parity")
}

/// δφ = [m, φ].
pub fn hoch_diff(a: &Algebra, phi: &Cochain) -> Result<Cochain, HochError> {
    check_tags(a, &[phi])?;
    Ok(diff_raw(a, phi))
}

pub(crate) fn diff_raw(a: &Algebra, phi: &Cochain) -> Cochain {
    bracket_raw(a, a.structure(), phi)
}
