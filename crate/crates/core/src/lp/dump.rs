//! Plain-text LP dump:
//!
//! ```text
//! min 2
//! obj 1/1 1/1
//! row 1/1 2/1 >= 3/1
//! bound 0 0/1 -
//! ```
//!
//! Rows and the objective are dense, every number is `p/q`, and a bound
//! line gives `lower upper` with `-` for an absent side.

use num_traits::Zero;

use super::{Bounds, LinearProgram, Relation, Sense};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, parse_rational, Rational};

fn dense(row: &[(usize, Rational)], n: usize) -> String {
    let mut vals = vec![Rational::zero(); n];
    for (j, a) in row {
        vals[*j] += a;
    }
    vals.iter().map(fmt_rational).collect::<Vec<_>>().join(" ")
}

pub fn to_dump(lp: &LinearProgram) -> String {
    let n = lp.num_vars();
    let sense = match lp.sense {
        Sense::Minimize => "min",
        Sense::Maximize => "max",
    };
    let mut out = format!("{sense} {n}\nobj {}\n", dense(&lp.objective, n));
    for c in &lp.constraints {
        out.push_str(&format!(
            "row {} {} {}\n",
            dense(&c.coeffs, n),
            c.relation.symbol(),
            fmt_rational(&c.rhs)
        ));
    }
    for (j, b) in lp.bounds.iter().enumerate() {
        if b.lower.is_none() && b.upper.is_none() {
            continue;
        }
        let side = |v: &Option<Rational>| v.as_ref().map_or("-".to_string(), fmt_rational);
        out.push_str(&format!("bound {j} {} {}\n", side(&b.lower), side(&b.upper)));
    }
    out
}

fn bad(msg: &str) -> Error {
    Error::MalformedInput(format!("lp dump: {msg}"))
}

fn parse_dense(tokens: &[&str]) -> Result<Vec<(usize, Rational)>> {
    tokens
        .iter()
        .enumerate()
        .map(|(j, t)| parse_rational(t).map(|v| (j, v)).ok_or_else(|| bad("bad number")))
        .filter(|r| r.as_ref().map_or(true, |(_, v)| !v.is_zero()))
        .collect()
}

pub fn parse_dump(text: &str) -> Result<LinearProgram> {
    let mut lines = text.lines();
    let head: Vec<&str> = lines.next().ok_or_else(|| bad("empty"))?.split_whitespace().collect();
    let [sense, n] = head[..] else {
        return Err(bad("bad header"));
    };
    let sense = match sense {
        "min" => Sense::Minimize,
        "max" => Sense::Maximize,
        _ => return Err(bad("sense must be min or max")),
    };
    let n: usize = n.parse().map_err(|_| bad("bad variable count"))?;
    let mut lp = LinearProgram::new(sense, n);
    for line in lines {
        let tok: Vec<&str> = line.split_whitespace().collect();
        match tok.first() {
            Some(&"obj") if tok.len() == n + 1 => lp.objective = parse_dense(&tok[1..])?,
            Some(&"row") if tok.len() == n + 3 => {
                let relation = match tok[n + 1] {
                    "<=" => Relation::Le,
                    "=" => Relation::Eq,
                    ">=" => Relation::Ge,
                    _ => return Err(bad("bad relation")),
                };
                let rhs = parse_rational(tok[n + 2]).ok_or_else(|| bad("bad rhs"))?;
                lp.add_constraint(parse_dense(&tok[1..=n])?, relation, rhs);
            }
            Some(&"bound") if tok.len() == 4 => {
                let j: usize = tok[1].parse().map_err(|_| bad("bad bound index"))?;
                if j >= n {
                    return Err(bad("bound index out of range"));
                }
                let side = |t: &str| -> Result<Option<Rational>> {
                    if t == "-" {
                        Ok(None)
                    } else {
                        parse_rational(t).map(Some).ok_or_else(|| bad("bad bound"))
                    }
                };
                lp.bounds[j] = Bounds {
                    lower: side(tok[2])?,
                    upper: side(tok[3])?,
                };
            }
            _ => return Err(bad(&format!("unrecognized line {line:?}"))),
        }
    }
    Ok(lp)
}
