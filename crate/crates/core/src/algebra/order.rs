use std::cmp::Ordering;

use super::poly::Monomial;

/// Total orders on exponent vectors. Variable 0 is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Graded lexicographic; used for printing.
    DegLex,
    /// Elimination order: the variables flagged in `front` are compared first
    /// (graded reverse lexicographic within the block), the rest break ties the
    /// same way. Any monomial containing a front variable beats every
    /// monomial free of them.
    Block { front: Vec<bool> },
}

impl MonomialOrder {
    /// Block order eliminating the given variable indices out of `nvars`.
    pub fn eliminating(nvars: usize, front: &[usize]) -> Self {
        let mut mask = vec![false; nvars];
        for &i in front {
            mask[i] = true;
        }
        MonomialOrder::Block { front: mask }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b, |_| true),
            MonomialOrder::DegLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            MonomialOrder::Block { front } => grevlex(a, b, |i| front[i])
                .then_with(|| grevlex(a, b, |i| !front[i])),
        }
    }
}

fn grevlex(a: &[u32], b: &[u32], keep: impl Fn(usize) -> bool) -> Ordering {
    let da: u32 = a.iter().enumerate().filter(|(i, _)| keep(*i)).map(|(_, e)| e).sum();
    let db: u32 = b.iter().enumerate().filter(|(i, _)| keep(*i)).map(|(_, e)| e).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if !keep(i) {
            continue;
        }
        if a[i] != b[i] {
            // smaller exponent in the last differing variable is larger
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn grevlex_textbook_cases() {
        let o = MonomialOrder::GrevLex;
        // x^2 y z^0 vs x y^3: degrees 3 < 4
        assert_eq!(o.cmp(&m(&[2, 1, 0]), &m(&[1, 3, 0])), Ordering::Less);
        // x y z^2 vs x^2 z^2? same degree 4 vs 4? -> compare last var
        assert_eq!(o.cmp(&m(&[1, 2, 1]), &m(&[2, 0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 1]), &m(&[1, 1, 1])), Ordering::Equal);
    }

    #[test]
    fn block_order_eliminates_front() {
        let o = MonomialOrder::eliminating(3, &[0]);
        // t beats anything free of t
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }
}
