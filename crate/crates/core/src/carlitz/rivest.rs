use crate::error::{Error, Result};
use crate::poly::ResiduePoly;

/// Rivest's criterion over `Z/2^w`, `w >= 2`: `f` permutes the ring iff `a_1`
/// is odd and both `a_2 + a_4 + ...` and `a_3 + a_5 + ...` are even.
pub fn rivest_is_permutation(f: &ResiduePoly) -> Result<bool> {
    let n = f.modulus();
    if n < 4 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    let c = f.coeffs();
    let parity = |start: usize| {
        c.iter()
            .skip(start)
            .step_by(2)
            .fold(0u64, |acc, &a| acc ^ (a & 1))
    };
    Ok(f.coeff(1) & 1 == 1 && parity(2) == 0 && parity(3) == 0)
}
