//! PD codes of closed braids.

use super::pd::PdCode;
use super::{invalid, DiagramError};

/// Closure of the braid word on `strands` strands. Letter `k > 0` is the
/// positive crossing `sigma_k` of strands `k` and `k + 1` (left strand over),
/// letter `-k` its inverse. Strands run upward.
pub fn braid_closure(word: &[i32], strands: usize) -> Result<PdCode, DiagramError> {
    if strands == 0 {
        return invalid("a braid needs at least one strand");
    }
    if word.is_empty() {
        return if strands == 1 {
            Ok(PdCode::unknot())
        } else {
            invalid("closure of the trivial braid has several components")
        };
    }
    let mut current: Vec<u32> = (1..=strands as u32).collect();
    let mut next_label = strands as u32 + 1;
    let mut crossings = Vec::with_capacity(word.len());
    for &letter in word {
        let k = letter.unsigned_abs() as usize;
        if letter == 0 || k >= strands {
            return invalid(format!("generator {letter} out of range for {strands} strands"));
        }
        let (left_in, right_in) = (current[k - 1], current[k]);
        let (left_out, right_out) = (next_label, next_label + 1);
        next_label += 2;
        // the strand entering bottom-left leaves top-right and vice versa
        if letter > 0 {
            crossings.push([right_in, left_out, right_out, left_in]);
        } else {
            crossings.push([left_in, right_in, left_out, right_out]);
        }
        current[k - 1] = right_out;
        current[k] = left_out;
    }
    if current.iter().zip(1u32..).any(|(&top, bottom)| top == bottom) {
        return invalid("a strand without crossings closes to a separate component");
    }
    // close up: the top arc in position i is the bottom arc in position i
    let closing: Vec<(u32, u32)> = current.iter().zip(1u32..).map(|(&top, bottom)| (top, bottom)).collect();
    for x in &mut crossings {
        for l in x.iter_mut() {
            if let Some(&(_, bottom)) = closing.iter().find(|(top, _)| top == l) {
                *l = bottom;
            }
        }
    }
    Ok(PdCode::new(crossings)?.relabeled())
}
