use crate::diagram::Chip;
use crate::error::{Error, Result};

/// Which generator of `K_3` replaces the chosen letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FingerprintLetter {
    Circle,
    Hook,
}

/// Value of the Zimin word `Z_n` in `K_3` with `x_i ↦ c` (or `h_1`) and
/// every other letter sent to the identity.
///
/// Computed through `Z_{k+1} = Z_k x_{k+1} Z_k`, so it needs only `O(n)`
/// chip products; circle counts beyond 64 bits are reported as overflow.
pub fn zimin_fingerprint_k3(n: u32, i: u32, choice: FingerprintLetter) -> Result<Chip> {
    if i == 0 || i > n {
        return Err(Error::OutOfRange {
            what: "Zimin letter",
            index: i as usize,
            min: 1,
            max: n as usize,
        });
    }
    let image = match choice {
        FingerprintLetter::Circle => Chip::circle(3),
        FingerprintLetter::Hook => Chip::hook(3, 1)?,
    };
    let one = Chip::identity(3);
    let value_of = |k: u32| if k == i { image.clone() } else { one.clone() };
    let mut z = value_of(1);
    for k in 2..=n {
        z = z.multiply(&value_of(k))?.multiply(&z)?;
    }
    Ok(z)
}
