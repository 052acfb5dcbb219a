//! Matrix data for the indecomposable factorizations and their traceless
//! gradings, in units of `1/h`.
//!
//! Each matrix is given row by row, entries separated by commas. When only
//! one matrix is listed, `phi = psi`.

use crate::gring::AdeType;

pub(super) struct Entry {
    pub phi: Vec<String>,
    pub psi: Option<Vec<String>>,
    /// `q` values times `h`; the `P0` half of `S` is `{±q}`.
    pub q: Vec<i64>,
    /// `q̄` values times `h`; the `P1` half of `S` is `{±q̄}`.
    pub qbar: Vec<i64>,
}

fn rows(r: &[&str]) -> Vec<String> {
    r.iter().map(|s| s.to_string()).collect()
}

fn same(phi: &[&str], q: &[i64]) -> Entry {
    Entry {
        phi: rows(phi),
        psi: None,
        q: q.to_vec(),
        qbar: q.to_vec(),
    }
}

fn pair(phi: &[&str], psi: &[&str], q: &[i64]) -> Entry {
    Entry {
        phi: rows(phi),
        psi: Some(rows(psi)),
        q: q.to_vec(),
        qbar: q.to_vec(),
    }
}

pub(super) fn entry(t: AdeType, k: u32) -> Entry {
    match t {
        AdeType::A(l) => a_entry(l, k),
        AdeType::D(l) => d_entry(l, k),
        AdeType::E6 => e6(k),
        AdeType::E7 => e7(k),
        AdeType::E8 => e8(k),
    }
}

/// The `A_l` grading depends on `b`; this only fills the matrices.
fn a_entry(l: u32, k: u32) -> Entry {
    let h = l + 1;
    let (xa, xk) = (format!("x^{}", h - k), format!("x^{k}"));
    Entry {
        phi: vec![format!("y,{xa}"), format!("{xk},-z")],
        psi: Some(vec![format!("z,{xa}"), format!("{xk},-y")]),
        q: Vec::new(),
        qbar: Vec::new(),
    }
}

pub(super) fn a_grading(l: u32, b: u32, k: u32) -> (Vec<i64>, Vec<i64>) {
    let h = (l + 1) as i64;
    let (b, k) = (b as i64, k as i64);
    (vec![b - k], vec![h - b - k])
}

fn d_entry(l: u32, k: u32) -> Entry {
    let l_ = l as i64;
    if k == 1 {
        let m = [format!("z,x^2+y^{}", l - 2), "y,-z".to_string()];
        return same(&[&m[0], &m[1]], &[l_ - 3]);
    }
    if k <= l - 2 {
        let k_ = k as i64;
        let q = [l_ - 2 - k_, l_ - k_];
        let m: Vec<String> = if k % 2 == 0 {
            let (a, b) = (k / 2, l - 1 - k / 2);
            vec![
                format!("-z,0,x*y,y^{a}"),
                format!("0,-z,y^{b},-x"),
                format!("x,y^{a},z,0"),
                format!("y^{b},-x*y,0,z"),
            ]
        } else {
            let (a, b, c, d) = ((k + 1) / 2, l - (k + 3) / 2, (k - 1) / 2, l - (k + 1) / 2);
            vec![
                format!("-z,y^{a},x*y,0"),
                format!("y^{b},z,0,-x"),
                format!("x,0,z,y^{c}"),
                format!("0,-x*y,y^{d},-z"),
            ]
        };
        let r: Vec<&str> = m.iter().map(|s| s.as_str()).collect();
        return same(&r, &q);
    }
    // the two leaves k = l − 1, l
    if l % 2 == 0 {
        let e = (l - 2) / 2;
        let (s1, s2) = if k == l - 1 { ("+", "-") } else { ("-", "+") };
        let m = [format!("z,y*(x{s1}I*y^{e})"), format!("x{s2}I*y^{e},-z")];
        same(&[&m[0], &m[1]], &[1])
    } else {
        let e = (l - 1) / 2;
        let a = [format!("z+I*y^{e},x*y"), format!("x,-(z-I*y^{e})")];
        let b = [format!("z-I*y^{e},x*y"), format!("x,-(z+I*y^{e})")];
        if k == l - 1 {
            pair(&[&a[0], &a[1]], &[&b[0], &b[1]], &[1])
        } else {
            pair(&[&b[0], &b[1]], &[&a[0], &a[1]], &[1])
        }
    }
}

fn e6(k: u32) -> Entry {
    match k {
        1 => same(
            &["-z,0,x^2,y^3", "0,-z,y,-x", "x,y^3,z,0", "y,-x^2,0,z"],
            &[1, 5],
        ),
        2 => pair(
            &[
                "-I*z,-y^2,x*y,0,x^2,0",
                "-y^2,-I*z,0,0,0,x",
                "0,0,-I*z,-x,0,y",
                "0,x*y,-x^2,-I*z,y^3,0",
                "x,0,0,y,-I*z,0",
                "0,x^2,y^3,0,x*y^2,-I*z",
            ],
            &[
                "I*z,-y^2,x*y,0,x^2,0",
                "-y^2,I*z,0,0,0,x",
                "0,0,I*z,-x,0,y",
                "0,x*y,-x^2,I*z,y^3,0",
                "x,0,0,y,I*z,0",
                "0,x^2,y^3,0,x*y^2,I*z",
            ],
            &[0, 2, 4],
        ),
        3 => pair(
            &[
                "-(y^2-I*z),0,x*y,x",
                "-x*y,y^2+I*z,x^2,0",
                "0,x,I*z,y",
                "x^2,-x*y,y^3,I*z",
            ],
            &[
                "-(y^2+I*z),0,x*y,x",
                "-x*y,y^2-I*z,x^2,0",
                "0,x,-I*z,y",
                "x^2,-x*y,y^3,-I*z",
            ],
            &[1, 3],
        ),
        4 => pair(
            &[
                "-(y^2+I*z),0,x*y,x",
                "-x*y,y^2-I*z,x^2,0",
                "0,x,-I*z,y",
                "x^2,-x*y,y^3,-I*z",
            ],
            &[
                "-(y^2-I*z),0,x*y,x",
                "-x*y,y^2+I*z,x^2,0",
                "0,x,I*z,y",
                "x^2,-x*y,y^3,I*z",
            ],
            &[1, 3],
        ),
        5 => pair(
            &["-(y^2-I*z),x", "x^2,y^2+I*z"],
            &["-(y^2+I*z),x", "x^2,y^2-I*z"],
            &[2],
        ),
        6 => pair(
            &["-(y^2+I*z),x", "x^2,y^2-I*z"],
            &["-(y^2-I*z),x", "x^2,y^2+I*z"],
            &[2],
        ),
        _ => unreachable!("vertex checked by caller"),
    }
}

fn e7(k: u32) -> Entry {
    match k {
        1 => same(
            &["z,0,-x^2,y", "0,z,x*y^2,x", "-x,y,-z,0", "x*y^2,x^2,0,-z"],
            &[2, 8],
        ),
        2 => same(
            &[
                "-z,y^2,x*y,0,x^2,0",
                "x*y,z,0,0,0,-x",
                "0,0,z,-x,0,y",
                "0,-x*y,-x^2,-z,x*y^2,0",
                "x,0,0,y,z,0",
                "0,-x^2,x*y^2,0,x^2*y,-z",
            ],
            &[1, 3, 7],
        ),
        3 => same(
            &[
                "-z,0,x*y,-y^2,0,0,x^2,0",
                "0,-z,0,y^2,0,0,0,x",
                "y^2,y^2,z,0,0,-x,0,0",
                "0,x*y,0,z,-x^2,0,0,0",
                "0,0,0,-x,-z,0,0,y",
                "0,0,-x^2,0,0,-z,x*y^2,y^2",
                "x,0,0,0,-y^2,y,z,0",
                "0,x^2,0,0,x*y^2,0,0,z",
            ],
            &[0, 2, 4, 6],
        ),
        4 => same(
            &["-z,y^2,0,x", "x*y,z,-x^2,0", "0,-x,-z,y", "x^2,0,x*y^2,z"],
            &[1, 5],
        ),
        5 => same(
            &[
                "-z,0,x*y,0,0,x",
                "-x*y,z,0,-y^2,-x^2,0",
                "y^2,0,z,-x,x*y,0",
                "0,-x*y,-x^2,-z,0,0",
                "0,-x,0,0,-z,-y",
                "x^2,0,0,x*y,-x*y^2,z",
            ],
            &[1, 3, 5],
        ),
        6 => same(
            &["z,0,-x*y,x", "0,z,x^2,y^2", "-y^2,x,-z,0", "x^2,x*y,0,-z"],
            &[2, 4],
        ),
        7 => same(&["z,x", "x^2+y^3,-z"], &[3]),
        _ => unreachable!("vertex checked by caller"),
    }
}

fn e8(k: u32) -> Entry {
    match k {
        1 => same(
            &["z,0,x,y", "0,z,y^4,-x^2", "x^2,y,-z,0", "y^4,-x,0,-z"],
            &[4, 14],
        ),
        2 => same(
            &[
                "z,-y^2,x*y,0,-x^2,0",
                "-y^3,-z,0,0,0,x",
                "0,0,-z,x,0,y",
                "0,-x*y,x^2,z,y^4,0",
                "-x,0,0,y,-z,0",
                "0,x^2,y^4,0,-x*y^3,z",
            ],
            &[3, 5, 13],
        ),
        3 => same(
            &[
                "-z,0,-x*y,y^2,0,0,x^2,0",
                "0,-z,y^3,0,0,0,0,x",
                "0,y^2,z,0,0,-x,0,0",
                "y^3,x*y,0,z,-x^2,0,0,0",
                "0,0,0,-x,-z,0,y^3,y",
                "0,0,-x^2,0,0,-z,0,y^2",
                "x,0,0,0,y^2,-y,z,0",
                "0,x^2,0,0,0,y^3,0,z",
            ],
            &[2, 4, 6, 12],
        ),
        4 => same(
            &[
                "z,0,x*y,0,0,-y^2,y^3,0,-x^2,0",
                "0,-z,0,0,0,0,0,-y^2,0,x",
                "0,0,-z,y^2,0,0,0,x,0,0",
                "0,x*y,y^3,z,0,0,-x^2,0,0,0",
                "0,y^2,0,0,z,-x,0,0,y^3,0",
                "-y^3,0,0,0,-x^2,-z,0,0,0,y^2",
                "0,0,0,-x,0,0,-z,0,0,y",
                "0,-y^3,x^2,0,0,0,x*y^2,z,0,0",
                "-x,0,0,0,y^2,0,0,y,-z,0",
                "0,x^2,x*y^2,0,0,0,y^4,0,0,z",
            ],
            &[1, 3, 5, 7, 11],
        ),
        5 => same(
            &[
                "-z,0,0,0,0,0,0,y^2,0,0,0,x",
                "0,-z,-x*y,0,0,0,y^3,-y^2,0,0,x^2,0",
                "0,0,z,0,0,-y^2,0,0,y^3,-x,0,0",
                "x*y,0,0,z,-y^3,0,0,0,-x^2,0,0,0",
                "0,0,0,-y^2,-z,0,0,x,0,0,0,0",
                "0,0,-y^3,0,0,-z,-x^2,0,0,0,x*y^2,y^2",
                "y^2,y^2,0,0,0,-x,z,0,0,0,0,0",
                "y^3,0,0,0,x^2,0,0,z,-x*y^2,0,0,0",
                "0,0,0,-x,0,0,0,0,-z,0,0,y",
                "0,0,-x^2,-y^3,0,0,x*y^2,0,0,-z,-y^4,0",
                "0,x,0,0,y^2,0,0,0,0,-y,z,0",
                "x^2,0,0,0,-x*y^2,0,0,0,y^4,0,0,z",
            ],
            &[0, 2, 4, 6, 8, 10],
        ),
        6 => same(
            &[
                "-z,0,0,y^2,0,x",
                "x*y,z,-y^3,0,-x^2,0",
                "0,-y^2,-z,x,0,0",
                "y^3,0,x^2,z,-x*y^2,0",
                "0,-x,0,0,-z,y",
                "x^2,0,-x*y^2,0,y^4,z",
            ],
            &[1, 5, 9],
        ),
        7 => same(
            &[
                "z,0,0,0,-y^3,0,0,-x",
                "x*y,-z,0,0,0,y^2,x^2,0",
                "0,0,-z,y^2,0,x,-y^3,0",
                "0,0,0,z,-x^2,0,0,y^2",
                "-y^2,0,0,-x,-z,0,0,0",
                "0,y^3,x^2,0,x*y^2,z,0,0",
                "0,x,-y^2,0,0,0,z,y",
                "-x^2,0,0,y^3,0,0,0,-z",
            ],
            &[1, 3, 7, 9],
        ),
        8 => same(
            &["z,0,x,y^2", "0,z,y^3,-x^2", "x^2,y^2,-z,0", "y^3,-x,0,-z"],
            &[2, 8],
        ),
        _ => unreachable!("vertex checked by caller"),
    }
}
