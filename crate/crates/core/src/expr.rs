//! A small expression language for building groups.
//!
//! ```text
//! expr := term ('x' term)*
//! term := atom ('^' INT)*
//! atom := NAME | NAME '(' args ')' | '(' expr ')'
//! ```
//!
//! Names: `C, D, Dic, S, A, He, F7, F8, PSL2, Sz8, Wr2, Cat`. Products are
//! left-associative; `×` is accepted for `x`. `C(n)^k` is the direct power
//! of a cyclic group, any other `g^k` expands to `g x g x ... x g`.
//! `Cat(name)` and `Cat(name, p)` take a catalog name verbatim.

use std::fmt;
use std::sync::Arc;

use crate::catalog::catalog;
use crate::constructors::*;
use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Cyclic(u32),
    CyclicPower(u32, u32),
    Dihedral(u32),
    Dicyclic(u32),
    Sym(u16),
    Alt(u16),
    Heisenberg(u32),
    F7,
    F8,
    Psl2(u32),
    Sz8,
    Product(Box<GroupExpr>, Box<GroupExpr>),
    WreathSquare(Box<GroupExpr>),
    Catalog(String, Option<u32>),
}

impl GroupExpr {
    pub fn product(l: GroupExpr, r: GroupExpr) -> GroupExpr {
        GroupExpr::Product(Box::new(l), Box::new(r))
    }

    /// Builds the group. Catalog entries are shared, everything else is
    /// constructed afresh.
    pub fn eval(&self) -> Result<Arc<Group>> {
        use GroupExpr::*;
        let g = match self {
            Cyclic(n) => cyclic(*n)?,
            CyclicPower(n, k) => cyclic_power(*n, *k)?,
            Dihedral(n) => dihedral(*n)?,
            Dicyclic(n) => dicyclic(*n)?,
            Sym(k) => symmetric(*k)?,
            Alt(k) => alternating(*k)?,
            Heisenberg(p) => heisenberg(*p)?,
            F7 => frobenius42()?,
            F8 => frobenius56()?,
            Psl2(q) => psl2(*q)?,
            Sz8 => suzuki8()?,
            Product(l, r) => direct_product(&l.eval()?, &r.eval()?)?,
            WreathSquare(g) => wreath_square(&g.eval()?)?,
            Catalog(name, p) => return catalog(name, *p),
        };
        Ok(Arc::new(g))
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupExpr::*;
        match self {
            Cyclic(n) => write!(f, "C({n})"),
            CyclicPower(n, k) => write!(f, "C({n})^{k}"),
            Dihedral(n) => write!(f, "D({n})"),
            Dicyclic(n) => write!(f, "Dic({n})"),
            Sym(k) => write!(f, "S({k})"),
            Alt(k) => write!(f, "A({k})"),
            Heisenberg(p) => write!(f, "He({p})"),
            F7 => f.write_str("F7"),
            F8 => f.write_str("F8"),
            Psl2(q) => write!(f, "PSL2({q})"),
            Sz8 => f.write_str("Sz8"),
            Product(l, r) => match **r {
                Product(..) => write!(f, "{l} x ({r})"),
                _ => write!(f, "{l} x {r}"),
            },
            WreathSquare(g) => write!(f, "Wr2({g})"),
            Catalog(name, None) => write!(f, "Cat({name})"),
            Catalog(name, Some(p)) => write!(f, "Cat({name},{p})"),
        }
    }
}

impl std::str::FromStr for GroupExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroupExpr> {
        parse(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_char() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_char()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected `{c}`, found `{found}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn at_times(&mut self) -> bool {
        matches!(self.peek(), Some('x' | '×'))
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_char().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: "integer too large".into(),
            })
    }

    fn name(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        // no name contains `x`, so `F7xF8` splits into a product
        while self
            .peek_char()
            .is_some_and(|c| c.is_ascii_alphanumeric() && c != 'x')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek_char() {
                Some(c) => self.err(format!("unexpected `{c}`")),
                None => self.err("unexpected end of input"),
            };
        }
        Ok((start, &self.src[start..self.pos]))
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut left = self.term()?;
        while self.at_times() {
            let c = self.peek_char().unwrap();
            self.pos += c.len_utf8();
            let right = self.term()?;
            left = GroupExpr::product(left, right);
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<GroupExpr> {
        let mut t = self.atom()?;
        while self.eat('^') {
            let at = self.pos;
            let k = self.int()?;
            if k == 0 {
                return Err(Error::Syntax {
                    pos: at,
                    msg: "exponent must be positive".into(),
                });
            }
            t = match t {
                GroupExpr::Cyclic(n) => GroupExpr::CyclicPower(n, k),
                GroupExpr::CyclicPower(n, j) => GroupExpr::CyclicPower(n, j * k),
                other => {
                    let mut acc = other.clone();
                    for _ in 1..k {
                        acc = GroupExpr::product(acc, other.clone());
                    }
                    acc
                }
            };
        }
        Ok(t)
    }

    fn args(&mut self, name: &str, start: usize, count: usize) -> Result<Vec<u32>> {
        if count == 0 {
            return Ok(vec![]);
        }
        if !self.eat('(') {
            return Err(Error::Syntax {
                pos: start,
                msg: format!("`{name}` takes {count} argument(s)"),
            });
        }
        let mut out = vec![self.int()?];
        while self.eat(',') {
            out.push(self.int()?);
        }
        self.expect(')')?;
        if out.len() != count {
            return Err(Error::Syntax {
                pos: start,
                msg: format!("`{name}` takes {count} argument(s), got {}", out.len()),
            });
        }
        Ok(out)
    }

    fn small_arg(&mut self, name: &str, start: usize) -> Result<u16> {
        let v = self.args(name, start, 1)?[0];
        u16::try_from(v).map_err(|_| Error::Syntax {
            pos: start,
            msg: "degree too large".into(),
        })
    }

    fn catalog_args(&mut self, start: usize) -> Result<GroupExpr> {
        if !self.eat('(') {
            return Err(Error::Syntax {
                pos: start,
                msg: "`Cat` takes a name".into(),
            });
        }
        self.skip_ws();
        let name_start = self.pos;
        while self.peek_char().is_some_and(|c| c != ',' && c != ')') {
            self.pos += self.peek_char().unwrap().len_utf8();
        }
        let name = self.src[name_start..self.pos].trim();
        if name.is_empty() {
            return Err(Error::Syntax {
                pos: name_start,
                msg: "empty catalog name".into(),
            });
        }
        let p = if self.eat(',') {
            Some(self.int()?)
        } else {
            None
        };
        self.expect(')')?;
        Ok(GroupExpr::Catalog(name.to_string(), p))
    }

    fn atom(&mut self) -> Result<GroupExpr> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        let (start, name) = self.name()?;
        use GroupExpr::*;
        Ok(match name {
            "C" => Cyclic(self.args(name, start, 1)?[0]),
            "D" => Dihedral(self.args(name, start, 1)?[0]),
            "Dic" => Dicyclic(self.args(name, start, 1)?[0]),
            "S" => Sym(self.small_arg(name, start)?),
            "A" => Alt(self.small_arg(name, start)?),
            "He" => Heisenberg(self.args(name, start, 1)?[0]),
            "PSL2" => Psl2(self.args(name, start, 1)?[0]),
            "F7" => F7,
            "F8" => F8,
            "Sz8" => Sz8,
            "Wr2" => {
                self.expect('(')?;
                let inner = self.expr()?;
                self.expect(')')?;
                WreathSquare(Box::new(inner))
            }
            "Cat" => self.catalog_args(start)?,
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unknown name `{other}`"),
                })
            }
        })
    }
}

pub fn parse(text: &str) -> Result<GroupExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(format!("unexpected `{c}` after expression"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::ENTRIES;
    use crate::order_sequence::os_of_group;
    use proptest::prelude::*;
    use GroupExpr::*;

    #[test]
    fn basic_forms() {
        assert_eq!(parse("C(5)^2").unwrap(), CyclicPower(5, 2));
        assert_eq!(
            parse("C(5) x A(5)").unwrap(),
            GroupExpr::product(Cyclic(5), Alt(5))
        );
        assert_eq!(
            parse("C(5)×A(5)").unwrap(),
            GroupExpr::product(Cyclic(5), Alt(5))
        );
        assert_eq!(
            parse("Cat(SD_300_23)").unwrap(),
            Catalog("SD_300_23".into(), None)
        );
        assert_eq!(
            parse("Cat( CpxC5^2:Dic12 , 7 )").unwrap(),
            Catalog("CpxC5^2:Dic12".into(), Some(7))
        );
        assert_eq!(
            parse("C(2) x C(3) x C(5)").unwrap(),
            GroupExpr::product(GroupExpr::product(Cyclic(2), Cyclic(3)), Cyclic(5))
        );
        assert_eq!(parse("S(3)^2").unwrap(), GroupExpr::product(Sym(3), Sym(3)));
        assert_eq!(parse("Wr2(S(3))").unwrap(), WreathSquare(Box::new(Sym(3))));
        assert_eq!(parse(" F7xF8 ").unwrap(), GroupExpr::product(F7, F8));
    }

    #[test]
    fn errors_have_positions() {
        let pos = |s: &str| match parse(s) {
            Err(Error::Syntax { pos, .. }) => pos,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos("Q(3)"), 0);
        assert_eq!(pos("C(3) x"), 6);
        assert_eq!(pos("C(3"), 3);
        assert_eq!(pos("C(3,4)"), 0);
        assert_eq!(pos("C(3) y"), 5);
        assert_eq!(pos("C(3)^0"), 5);
        assert_eq!(pos("C"), 0);
    }

    #[test]
    fn evaluation() {
        let g = parse("Cat(SD_300_23)").unwrap().eval().unwrap();
        assert_eq!(
            os_of_group(&g).to_string(),
            "n=300; (1,1)(2,25)(3,50)(4,150)(5,24)(6,50)"
        );
        assert_eq!(parse("C(5)^2").unwrap().eval().unwrap().order(), 25);
        assert!(parse("D(7)").unwrap().eval().is_err());
        assert!(parse("Cat(nope)").unwrap().eval().is_err());
    }

    #[test]
    fn catalog_expressions_round_trip() {
        for e in ENTRIES {
            let expr = Catalog(e.name.to_string(), e.default_prime);
            assert_eq!(parse(&expr.to_string()).unwrap(), expr);
        }
    }

    fn arb_expr() -> impl Strategy<Value = GroupExpr> {
        let leaf = prop_oneof![
            (1u32..50).prop_map(Cyclic),
            (1u32..50, 2u32..4).prop_map(|(n, k)| CyclicPower(n, k)),
            (2u32..20).prop_map(|n| Dihedral(2 * n)),
            (1u32..10).prop_map(|m| Dicyclic(4 * m)),
            (1u16..6).prop_map(Sym),
            (1u16..6).prop_map(Alt),
            Just(F7),
            Just(F8),
            Just(Sz8),
            prop_oneof![Just(3u32), Just(5), Just(7)].prop_map(Heisenberg),
            prop_oneof![Just(5u32), Just(7), Just(64)].prop_map(Psl2),
            (0..ENTRIES.len())
                .prop_map(|i| Catalog(ENTRIES[i].name.into(), ENTRIES[i].default_prime)),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| GroupExpr::product(l, r)),
                inner.prop_map(|g| WreathSquare(Box::new(g))),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(e in arb_expr()) {
            let text = e.to_string();
            prop_assert_eq!(parse(&text).unwrap(), e);
            prop_assert_eq!(parse(&text).unwrap().to_string(), text);
        }
    }
}
