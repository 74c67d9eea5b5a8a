//! Monotone subsequences of length `n+1` in sequences of length `n²+1`.

use super::error::GraphError;

/// Returns `n+1` increasing indices whose values are strictly monotone.
///
/// An increasing run is preferred when both directions exist.
pub fn monotone_subsequence<T: Ord>(seq: &[T], n: usize) -> Result<Vec<usize>, GraphError> {
    let needed = n * n + 1;
    if seq.len() < needed {
        return Err(GraphError::SequenceTooShort { needed, got: seq.len() });
    }
    let mut sorted: Vec<&T> = seq.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(GraphError::RepeatedEntry);
    }
    let target = n + 1;
    if let Some(found) = chain(seq, target, |a, b| a < b) {
        return Ok(found);
    }
    if let Some(found) = chain(seq, target, |a, b| a > b) {
        return Ok(found);
    }
    unreachable!("every sequence of n²+1 distinct values has a monotone run of length n+1")
}

fn chain<T>(seq: &[T], target: usize, before: impl Fn(&T, &T) -> bool) -> Option<Vec<usize>> {
    let mut best = vec![1usize; seq.len()];
    let mut prev = vec![usize::MAX; seq.len()];
    for i in 0..seq.len() {
        for j in 0..i {
            if before(&seq[j], &seq[i]) && best[j] + 1 > best[i] {
                best[i] = best[j] + 1;
                prev[i] = j;
            }
        }
        if best[i] == target {
            let mut out = vec![i];
            let mut cur = i;
            while prev[cur] != usize::MAX {
                cur = prev[cur];
                out.push(cur);
            }
            out.reverse();
            return Some(out);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(monotone_subsequence(&[1, 2, 3, 4, 5], 2).unwrap(), vec![0, 1, 2]);
        let dec = monotone_subsequence(&[5, 4, 3, 2, 1], 2).unwrap();
        assert_eq!(dec.len(), 3);
        let mixed = [3, 1, 4, 2, 5];
        let idx = monotone_subsequence(&mixed, 2).unwrap();
        assert_eq!(idx.len(), 3);
        assert!(idx.windows(2).all(|w| w[0] < w[1] && mixed[w[0]] < mixed[w[1]]));
    }

    #[test]
    fn errors() {
        assert!(matches!(monotone_subsequence(&[1, 2, 3], 2), Err(GraphError::SequenceTooShort { .. })));
        assert!(matches!(monotone_subsequence(&[1, 1], 1), Err(GraphError::RepeatedEntry)));
        assert_eq!(monotone_subsequence::<i32>(&[7], 0).unwrap(), vec![0]);
    }
}
