//! Built-in groups, each realized structurally and audited against its
//! defining relations.

use crate::error::{Error, Result};
use crate::group::GroupTable;

use super::words::{check_relations, power_word};

/// Names accepted by [`builtin`], with `n`/`p` as integer parameters.
pub const BUILTIN_NAMES: &[&str] =
    &["cyclic(n)", "dihedral(n)", "symmetric(n)", "quaternion8", "klein4", "heisenberg(p)", "paper-ex1", "paper-ex2"];

fn param(name: &str, head: &str) -> Option<Result<usize>> {
    let inner = name.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')?;
    Some(inner.trim().parse::<usize>().map_err(|_| Error::MalformedSpec(format!("bad parameter in `{name}`"))))
}

pub fn builtin(name: &str, cap: usize) -> Result<GroupTable> {
    let name = name.trim();
    let g = if let Some(n) = param(name, "cyclic") {
        cyclic(n?, cap)?
    } else if let Some(n) = param(name, "dihedral") {
        dihedral(n?, cap)?
    } else if let Some(n) = param(name, "symmetric") {
        symmetric(n?, cap)?
    } else if let Some(p) = param(name, "heisenberg") {
        heisenberg(p?, cap)?
    } else {
        match name {
            "quaternion8" => quaternion8(cap)?,
            "klein4" => klein4(cap)?,
            "paper-ex1" => paper_ex1(cap)?,
            "paper-ex2" => paper_ex2(cap)?,
            _ => {
                return Err(Error::MalformedSpec(format!(
                    "unknown builtin `{name}` (known: {})",
                    BUILTIN_NAMES.join(", ")
                )))
            }
        }
    };
    Ok(g)
}

fn check_order(g: &GroupTable, expected: usize) -> Result<()> {
    if g.order() != expected {
        return Err(Error::ConstructionInvalid(format!("order {} instead of {expected}", g.order())));
    }
    Ok(())
}

fn labelled<T>(built: (GroupTable, Vec<T>), label: impl Fn(&T) -> String) -> GroupTable {
    let (g, elems) = built;
    g.with_labels(elems.iter().map(label).collect())
}

pub fn cyclic(n: usize, cap: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::MalformedSpec("cyclic(0)".into()));
    }
    let gens: &[usize] = if n == 1 { &[] } else { &[1] };
    let g = labelled(GroupTable::generate(0usize, gens, |a, b| (a + b) % n, cap)?, |&e| power_word(&[("a", e as u64)]));
    check_order(&g, n)?;
    if n > 1 {
        check_relations(&g, &[&format!("a^{n}")])?;
    }
    Ok(g)
}

/// Dihedral group of order `2n`: elements `s^e r^i` with `s^-1 r s = r^-1`.
pub fn dihedral(n: usize, cap: usize) -> Result<GroupTable> {
    if n < 1 {
        return Err(Error::MalformedSpec("dihedral(n) needs n >= 1".into()));
    }
    // (e, i) stands for s^e r^i
    let mul = move |x: &(usize, usize), y: &(usize, usize)| {
        let i = if y.0 == 1 { (n - x.1) % n } else { x.1 };
        ((x.0 + y.0) % 2, (i + y.1) % n)
    };
    let g = labelled(GroupTable::generate((0, 0), &[(0, 1 % n), (1, 0)], mul, cap)?, |&(e, i)| {
        power_word(&[("s", e as u64), ("r", i as u64)])
    });
    check_order(&g, 2 * n)?;
    if n > 1 {
        check_relations(&g, &[&format!("r^{n}"), "s^2", "s^-1*r*s=r^-1"])?;
    }
    Ok(g)
}

/// Permutation product: apply `p` first, then `q`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&i| q[i]).collect()
}

/// Cycle notation on points `1..=n`.
pub fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.join(",")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

pub fn symmetric(n: usize, cap: usize) -> Result<GroupTable> {
    if !(1..=5).contains(&n) {
        return Err(Error::MalformedSpec("symmetric(n) is offered for 1 <= n <= 5".into()));
    }
    let id: Vec<usize> = (0..n).collect();
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t = id.clone();
        t.swap(0, 1);
        gens.push(t);
    }
    if n >= 3 {
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    let g = labelled(GroupTable::generate(id, &gens, |p, q| compose(p, q), cap)?, |p| cycle_label(p));
    check_order(&g, (1..=n).product())?;
    Ok(g)
}

/// `i^a j^b` with `a in 0..4`, `b in 0..2`, `i^2 = j^2`, `j^-1 i j = i^-1`.
pub fn quaternion8(cap: usize) -> Result<GroupTable> {
    let mul = |x: &(u8, u8), y: &(u8, u8)| {
        // j^b i^a' = i^(±a') j^b, and j^2 = i^2
        let a = if x.1 == 1 { (4 - y.0) % 4 } else { y.0 };
        let mut i = (x.0 + a) % 4;
        let mut j = x.1 + y.1;
        if j == 2 {
            j = 0;
            i = (i + 2) % 4;
        }
        (i, j)
    };
    let g = labelled(GroupTable::generate((0, 0), &[(1, 0), (0, 1)], mul, cap)?, |&(a, b)| {
        power_word(&[("i", a as u64), ("j", b as u64)])
    });
    check_order(&g, 8)?;
    check_relations(&g, &["i^4", "i^2=j^2", "j^-1*i*j=i^-1"])?;
    Ok(g)
}

pub fn klein4(cap: usize) -> Result<GroupTable> {
    let g = labelled(
        GroupTable::generate((0u8, 0u8), &[(1, 0), (0, 1)], |x, y| (x.0 ^ y.0, x.1 ^ y.1), cap)?,
        |&(a, b)| power_word(&[("a", a as u64), ("b", b as u64)]),
    );
    check_order(&g, 4)?;
    check_relations(&g, &["a^2", "b^2", "[a,b]"])?;
    Ok(g)
}

/// Heisenberg triples `x^a y^b z^c` over `Z/m`, with `y x = x y z`.
fn heis_mul(m: u32) -> impl Fn(&[u32; 3], &[u32; 3]) -> [u32; 3] + Copy {
    move |u, v| [(u[0] + v[0]) % m, (u[1] + v[1]) % m, (u[2] + v[2] + u[1] * v[0]) % m]
}

pub fn heisenberg(p: usize, cap: usize) -> Result<GroupTable> {
    if p < 2 {
        return Err(Error::MalformedSpec("heisenberg(p) needs p >= 2".into()));
    }
    if p.saturating_pow(3) > cap {
        return Err(Error::CapExceeded { order: p.saturating_pow(3), cap });
    }
    let m = p as u32;
    let g = labelled(GroupTable::generate([0; 3], &[[1, 0, 0], [0, 1, 0]], heis_mul(m), cap)?, |t| {
        power_word(&[("x", t[0] as u64), ("y", t[1] as u64), ("z", t[2] as u64)])
    });
    check_order(&g, p * p * p)?;
    check_relations(&g, &[&format!("x^{p}"), &format!("y^{p}"), "[y,x]=z", "[z,x]", "[z,y]"])?;
    Ok(g)
}

/// Relators of the order-1000 example; `lhs` alone means `lhs = 1`.
pub const EX1_RELATIONS: &[&str] = &[
    "x1^2*x2^-1",
    "x2^2*x3^-1",
    "x4^5",
    "x3^2",
    "x5^5",
    "x6^5",
    "[x2,x1]",
    "[x3,x1]",
    "[x3,x2]",
    "[x6,x3]",
    "[x6,x4]",
    "[x6,x5]",
    "[x5,x4]=x6",
    "[x5,x1]=x4*x5",
    "[x6,x1]=x6^2",
    "[x4,x2]=x4*x6^2",
    "[x6,x2]=x6^3",
    "[x5,x2]=x5*x6^2",
    "[x5,x3]=x5^3*x6^2",
    "[x4,x3]=x4^3*x6^2",
    "[x4,x1]=x4^2*x5^3*x6^4",
];

/// `x1^e * x4^a x5^b x6^c` as `(e, [a,b,c])` with `x2 = x1^2`, `x3 = x1^4`
/// and `P = <x4,x5,x6>` a Heisenberg group of order 125.
pub fn paper_ex1(cap: usize) -> Result<GroupTable> {
    let h = heis_mul(5);
    let pow = move |t: [u32; 3], e: u32| (0..e).fold([0; 3], |acc, _| h(&acc, &t));
    // x1^-1 n x1 on the generators of P
    let act = move |n: &[u32; 3]| {
        let x4 = [3, 3, 4];
        let x5 = h(&h(&[0, 1, 0], &[1, 0, 0]), &[0, 1, 0]);
        let x6 = [0, 0, 3];
        // x4^a x5^b x6^c, read as a product of the images
        h(&h(&pow(x4, n[0]), &pow(x5, n[1])), &pow(x6, n[2]))
    };
    let act_pow = move |n: &[u32; 3], e: u32| (0..e).fold(*n, |acc, _| act(&acc));
    // (x1^e n)(x1^f m) = x1^(e+f) (x1^-f n x1^f) m
    let mul = move |x: &(u32, [u32; 3]), y: &(u32, [u32; 3])| ((x.0 + y.0) % 8, h(&act_pow(&x.1, y.0), &y.1));
    let gens = [(1, [0, 0, 0]), (2, [0, 0, 0]), (4, [0, 0, 0]), (0, [1, 0, 0]), (0, [0, 1, 0]), (0, [0, 0, 1])];
    let g = labelled(GroupTable::generate((0, [0; 3]), &gens, mul, cap)?, |(e, n)| {
        power_word(&[
            ("x1", (e & 1) as u64),
            ("x2", (e >> 1 & 1) as u64),
            ("x3", (e >> 2 & 1) as u64),
            ("x4", n[0] as u64),
            ("x5", n[1] as u64),
            ("x6", n[2] as u64),
        ])
    });
    check_order(&g, 1000)?;
    check_relations(&g, EX1_RELATIONS)?;
    Ok(g)
}

pub const EX2_RELATIONS: &[&str] = &[
    "a^2",
    "b^3",
    "c^3",
    "d^3",
    "a^-1*b*a=b^-1",
    "a^-1*c*a=c^-1",
    "a^-1*d*a=d",
    "b^-1*c*b=c*d",
    "b^-1*d*b=d",
    "c^-1*d*c=d",
];

/// `a^e * b^i c^j d^k` as `(e, [i,j,k])`: extraspecial group of order 27
/// with `c b = b c d`, extended by `a` inverting `b` and `c`.
pub fn paper_ex2(cap: usize) -> Result<GroupTable> {
    let h = heis_mul(3);
    let pow = move |t: [u32; 3], e: u32| (0..e).fold([0; 3], |acc, _| h(&acc, &t));
    let act = move |n: &[u32; 3]| h(&h(&pow([2, 0, 0], n[0]), &pow([0, 2, 0], n[1])), &pow([0, 0, 1], n[2]));
    let act_pow = move |n: &[u32; 3], e: u32| (0..e).fold(*n, |acc, _| act(&acc));
    let mul = move |x: &(u32, [u32; 3]), y: &(u32, [u32; 3])| ((x.0 + y.0) % 2, h(&act_pow(&x.1, y.0), &y.1));
    let gens = [(1, [0, 0, 0]), (0, [1, 0, 0]), (0, [0, 1, 0]), (0, [0, 0, 1])];
    let g = labelled(GroupTable::generate((0, [0; 3]), &gens, mul, cap)?, |(e, n)| {
        power_word(&[("a", *e as u64), ("b", n[0] as u64), ("c", n[1] as u64), ("d", n[2] as u64)])
    });
    check_order(&g, 54)?;
    check_relations(&g, EX2_RELATIONS)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 5000;

    #[test]
    fn orders() {
        assert_eq!(builtin("cyclic(6)", CAP).unwrap().order(), 6);
        assert_eq!(builtin("cyclic(1)", CAP).unwrap().order(), 1);
        assert_eq!(builtin("dihedral(4)", CAP).unwrap().order(), 8);
        assert_eq!(builtin("symmetric(3)", CAP).unwrap().order(), 6);
        assert_eq!(builtin("symmetric(5)", CAP).unwrap().order(), 120);
        assert_eq!(builtin("quaternion8", CAP).unwrap().order(), 8);
        assert_eq!(builtin("klein4", CAP).unwrap().order(), 4);
        assert_eq!(builtin("heisenberg(3)", CAP).unwrap().order(), 27);
        assert_eq!(builtin("paper-ex2", CAP).unwrap().order(), 54);
        assert_eq!(builtin("paper-ex1", CAP).unwrap().order(), 1000);
    }

    #[test]
    fn bad_names() {
        assert!(builtin("cyclic(x)", CAP).is_err());
        assert!(builtin("symmetric(6)", CAP).is_err());
        assert!(builtin("nope", CAP).is_err());
        assert!(matches!(builtin("paper-ex1", 100), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn abelian_flags() {
        assert!(builtin("cyclic(6)", CAP).unwrap().is_abelian());
        assert!(builtin("klein4", CAP).unwrap().is_abelian());
        assert!(!builtin("quaternion8", CAP).unwrap().is_abelian());
        assert!(!builtin("dihedral(3)", CAP).unwrap().is_abelian());
    }

    #[test]
    fn normal_subgroup_counts() {
        let count = |n: &str| builtin(n, CAP).unwrap().normal_subgroups().len();
        assert_eq!(count("cyclic(6)"), 4);
        assert_eq!(count("symmetric(3)"), 3);
        assert_eq!(count("quaternion8"), 6);
        assert_eq!(count("dihedral(4)"), 6);
        assert_eq!(count("paper-ex2"), 8);
        assert_eq!(count("paper-ex1"), 6);
    }

    #[test]
    fn ex1_normal_orders() {
        let g = builtin("paper-ex1", CAP).unwrap();
        let orders: Vec<usize> = g.normal_subgroups().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 5, 125, 250, 500, 1000]);
    }
}
