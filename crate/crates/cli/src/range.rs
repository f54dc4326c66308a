use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// Inclusive index range written `A..B`, or a single index `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub start: u64,
    pub end: u64,
}

impl IndexRange {
    pub fn iter(self) -> RangeInclusive<u64> {
        self.start..=self.end
    }
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| format!("invalid index {t:?}: {e}"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => {
                let a = num(s)?;
                (a, a)
            }
        };
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(IndexRange { start, end })
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!("0..6".parse(), Ok(IndexRange { start: 0, end: 6 }));
        assert_eq!("5".parse(), Ok(IndexRange { start: 5, end: 5 }));
        assert!("6..0".parse::<IndexRange>().is_err());
        assert!("-1..3".parse::<IndexRange>().is_err());
        assert!("1..=3".parse::<IndexRange>().is_err());
        assert_eq!("0..6".parse::<IndexRange>().unwrap().iter().count(), 7);
    }
}
