use serde_json::{json, Value};

use crate::descent::{assemble_pk, assemble_qk, restricted_poly_recurrence, Family};
use crate::error::{Error, Result};
use crate::polyring::IntPoly;
use crate::seqprops::{is_log_concave, is_symmetric, is_unimodal, SequenceVerdict};

/// Default cap on `k` for the kernel tables and on `n` for the grid.
pub const DEFAULT_TABLE_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) enum KernelTable {
    P,
    Q,
}

fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        return Err(Error::TooLarge {
            what,
            requested,
            cap,
        });
    }
    Ok(())
}

fn short(v: &SequenceVerdict) -> String {
    match v {
        SequenceVerdict::Holds => "yes".into(),
        SequenceVerdict::Fails(w) => {
            let items: Vec<String> = w.iter().map(usize::to_string).collect();
            format!("no:{}", items.join(","))
        }
    }
}

/// Text and JSON for rows `k = 0..=max_k`. Witness indices are exponents of `u`.
pub(super) fn kernel_table(
    which: KernelTable,
    max_k: usize,
    cap: usize,
) -> Result<(String, Value)> {
    check_cap("max-k", max_k, cap)?;
    let (name, assemble): (&str, fn(usize) -> Result<IntPoly>) = match which {
        KernelTable::P => ("P", assemble_pk),
        KernelTable::Q => ("Q", assemble_qk),
    };
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    for k in 0..=max_k {
        let poly = assemble(k)?;
        let c = poly.coeffs();
        let (sym, uni, lc) = (is_symmetric(c), is_unimodal(c), is_log_concave(c));
        cells.push([
            k.to_string(),
            short(&sym),
            short(&uni),
            short(&lc),
            poly.to_csv(),
        ]);
        rows.push(json!({
            "k": k,
            "coefficients": poly,
            "symmetric": sym,
            "unimodal": uni,
            "log_concave": lc,
        }));
    }
    let header = ["k", "symmetric", "unimodal", "log-concave", "coefficients"];
    let text = columns(&header, &cells);
    let j = json!({ "table": format!("{name}_k"), "rows": rows });
    Ok((text, j))
}

/// `B_{n,k}` (or `A_{n,k}`) for `0 <= k <= n <= max_n`, by the recurrence.
pub(super) fn bnk_grid(family: Family, max_n: usize, cap: usize) -> Result<(String, Value)> {
    check_cap("max-n", max_n, cap)?;
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            let p = restricted_poly_recurrence(family, n, k);
            cells.push([n.to_string(), k.to_string(), p.to_csv()]);
            rows.push(json!({ "n": n, "k": k, "coefficients": p }));
        }
    }
    let text = columns(&["n", "k", "coefficients"], &cells);
    let j = json!({ "family": family.name(), "grid": rows });
    Ok((text, j))
}

/// Left-aligned columns separated by two spaces; the last column is not padded.
fn columns<const N: usize>(header: &[&str; N], cells: &[[String; N]]) -> String {
    let mut width = [0; N];
    for (i, h) in header.iter().enumerate() {
        width[i] = h.len();
    }
    for row in cells {
        for (i, c) in row.iter().enumerate() {
            width[i] = width[i].max(c.len());
        }
    }
    let line = |items: Vec<&str>| -> String {
        let mut s = String::new();
        for (i, c) in items.iter().enumerate() {
            if i + 1 == N {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  ", w = width[i]));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for row in cells {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

/// The `Q_k` table as text.
pub fn emit_qk_table(max_k: usize) -> Result<String> {
    kernel_table(KernelTable::Q, max_k, DEFAULT_TABLE_CAP).map(|(text, _)| text)
}

/// The `P_k` table as text.
pub fn emit_pk_table(max_k: usize) -> Result<String> {
    kernel_table(KernelTable::P, max_k, DEFAULT_TABLE_CAP).map(|(text, _)| text)
}
