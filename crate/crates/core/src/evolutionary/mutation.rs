use rand::Rng;

use crate::subset::LabelSubset;

/// Flips every bit of `x` independently with probability exactly `1/k`.
///
/// Each bit costs one uniform draw from `0..k`; the bit flips when the draw
/// is zero.
pub fn standard_mutation<R: Rng + ?Sized>(x: &LabelSubset, rng: &mut R) -> LabelSubset {
    let mut y = x.clone();
    flip_bits(&mut y, rng);
    y
}

/// [`standard_mutation`] writing into a reusable buffer.
pub(crate) fn mutate_into<R: Rng + ?Sized>(x: &LabelSubset, y: &mut LabelSubset, rng: &mut R) {
    y.copy_from(x);
    flip_bits(y, rng);
}

fn flip_bits<R: Rng + ?Sized>(y: &mut LabelSubset, rng: &mut R) {
    let k = y.width();
    for label in 0..k {
        if rng.gen_range(0..k) == 0 {
            y.toggle(label);
        }
    }
}
