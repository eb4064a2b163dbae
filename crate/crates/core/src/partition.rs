use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition padded with zeros to the rank it is used at.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Partition(Vec<i32>);

impl Partition {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if parts.iter().any(|&x| x < 0) {
            return Err(Error::Invalid(format!("negative part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Pad with zeros to exactly `n` parts.
    pub fn padded(&self, n: usize) -> Result<Self> {
        let nonzero = self.0.iter().filter(|&&x| x > 0).count();
        if nonzero > n {
            return Err(Error::Invalid(format!("{self} has more than {n} parts")));
        }
        let mut v: Vec<i32> = self.0.iter().copied().take(n).collect();
        v.resize(n, 0);
        Ok(Partition(v))
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn size(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn first(&self) -> i32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Comma list such as `2,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = t
            .split(',')
            .map(|s| s.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("partition {text:?}: {e}")))?;
        Partition::new(parts)
    }

    /// Every partition of size at most `max_size` with at most `n` parts,
    /// padded to `n`, in lexicographic order.
    pub fn all_up_to(n: usize, max_size: i32) -> Vec<Partition> {
        fn rec(n: usize, left: i32, cap: i32, cur: &mut Vec<i32>, out: &mut Vec<Partition>) {
            if cur.len() == n {
                out.push(Partition(cur.clone()));
                return;
            }
            for x in 0..=cap.min(left) {
                cur.push(x);
                rec(n, left - x, x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_size, max_size, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<i32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<i32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_and_padding() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, -1]).is_err());
        let p = Partition::parse("2,1").unwrap();
        assert_eq!(p.padded(3).unwrap().parts(), &[2, 1, 0]);
        assert!(p.padded(1).is_err());
        assert_eq!(Partition::parse("(3, 1, 0)").unwrap().padded(2).unwrap().parts(), &[3, 1]);
    }

    #[test]
    fn enumeration_counts() {
        // partitions of 0..=4 with at most 2 parts: 1+1+2+2+3
        assert_eq!(Partition::all_up_to(2, 4).len(), 9);
        assert_eq!(Partition::all_up_to(1, 4).len(), 5);
    }
}
