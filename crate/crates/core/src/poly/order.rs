use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Monomial;

/// A monomial order over the variables of one table, referenced by index.
///
/// Variable `0` is the largest variable for every order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Ordered partition of the variables; grevlex inside each block, earlier
    /// blocks dominate. Variables inside a block are listed largest first.
    Block(Vec<Vec<usize>>),
}

fn revlex_tail(a: &[u16], b: &[u16], vars: impl DoubleEndedIterator<Item = usize>) -> Ordering {
    for v in vars.rev() {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Elimination order: `first` dominates the remaining variables, each block
    /// keeps the table order.
    pub fn elimination(nvars: usize, first: &[usize]) -> MonomialOrder {
        let mut head: Vec<usize> = first.to_vec();
        head.sort_unstable();
        head.dedup();
        let tail: Vec<usize> = (0..nvars).filter(|v| !head.contains(v)).collect();
        MonomialOrder::Block(alloc::vec![head, tail])
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::GrevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tail(a.exponents(), b.exponents(), 0..a.len())),
            MonomialOrder::Block(blocks) => {
                let (ea, eb) = (a.exponents(), b.exponents());
                for block in blocks {
                    let da: u32 = block.iter().map(|&v| ea[v] as u32).sum();
                    let db: u32 = block.iter().map(|&v| eb[v] as u32).sum();
                    let ord = da.cmp(&db).then_with(|| revlex_tail(ea, eb, block.iter().copied()));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Checks that a block order partitions `0..nvars`.
    pub fn is_valid_for(&self, nvars: usize) -> bool {
        match self {
            MonomialOrder::Block(blocks) => {
                let mut seen = alloc::vec![false; nvars];
                for &v in blocks.iter().flatten() {
                    if v >= nvars || seen[v] {
                        return false;
                    }
                    seen[v] = true;
                }
                seen.into_iter().all(|s| s)
            }
            _ => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lex_and_grevlex_textbook_cases() {
        // x > y > z
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Less);
        // x y^2 against x^2 z
        assert_eq!(MonomialOrder::GrevLex.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Less);
    }

    #[test]
    fn elimination_order_dominates() {
        let ord = MonomialOrder::elimination(3, &[0]);
        assert!(ord.is_valid_for(3));
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 1, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert!(!MonomialOrder::Block(alloc::vec![alloc::vec![0], alloc::vec![0, 1]]).is_valid_for(2));
    }
}
