use num_traits::One;

use super::{MultivarPoly, Rational};

/// The fundamental quasisymmetric function `F_I` of degree `n` in `nvars`
/// variables: the sum of `z_{i_1} ⋯ z_{i_n}` over `i_1 ≤ ⋯ ≤ i_n` with a
/// strict increase `i_j < i_{j+1}` at every `j ∈ I`. `I` is a bitmask over
/// `[n-1]`, position `j` ↔ bit `j - 1`.
pub fn fundamental_f(descents: u64, n: usize, nvars: usize) -> MultivarPoly {
    let mut out = MultivarPoly::zero(nvars);
    let mut exps = vec![0u32; nvars];
    chains(descents, n, nvars, 0, 0, &mut exps, &mut out);
    out
}

fn chains(
    descents: u64,
    n: usize,
    nvars: usize,
    position: usize,
    floor: usize,
    exps: &mut [u32],
    out: &mut MultivarPoly,
) {
    if position == n {
        out.add_term(exps.to_vec(), Rational::one());
        return;
    }
    for var in floor..nvars {
        exps[var] += 1;
        // position is 0-indexed; the gap after it is index position + 1 of [n-1]
        let strict = position + 1 < n && descents & (1 << position) != 0;
        chains(descents, n, nvars, position + 1, if strict { var + 1 } else { var }, exps, out);
        exps[var] -= 1;
    }
}
