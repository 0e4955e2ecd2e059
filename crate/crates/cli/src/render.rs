//! Text and LaTeX rendering of serialized elements and tableaux.
//!
//! Both renderers work off the JSON term list, which is already sorted
//! lexicographically by index. Text prints `2*S[3,2,1]`; LaTeX prints the
//! bases under their usual names, with the immaculate basis as
//! `\mathfrak{S}` and its dual as `\mathfrak{S}^*`.

use immaculata::json::ElementJson;

fn latex_prefix(basis: &str) -> &str {
    match basis {
        "S" => r"\mathfrak{S}",
        "Sstar" => r"\mathfrak{S}^*",
        "Psi" => r"\Psi",
        other => other,
    }
}

fn join_index(index: &[i64]) -> String {
    index
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Splits a decimal-string coefficient into (is_negative, magnitude).
fn split_coeff(coeff: &str) -> (bool, &str) {
    match coeff.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, coeff),
    }
}

fn render_terms(
    element: &ElementJson,
    term_of: impl Fn(&str, &[i64]) -> String,
    times: &str,
) -> String {
    if element.terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, term) in element.terms.iter().enumerate() {
        let (negative, magnitude) = split_coeff(&term.coeff);
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if magnitude != "1" {
            out.push_str(magnitude);
            out.push_str(times);
        }
        out.push_str(&term_of(&element.basis, &term.index));
    }
    out
}

/// `H[2,3] - H[3,2]`
pub fn element_text(element: &ElementJson) -> String {
    render_terms(
        element,
        |basis, index| format!("{basis}[{}]", join_index(index)),
        "*",
    )
}

/// `\mathfrak{S}_{2,3} - \mathfrak{S}_{3,2}`
pub fn element_latex(element: &ElementJson) -> String {
    render_terms(
        element,
        |basis, index| format!("{}_{{{}}}", latex_prefix(basis), join_index(index)),
        r"\,",
    )
}

pub fn tableau_text(rows: &[Vec<u32>]) -> String {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn tableau_latex(rows: &[Vec<u32>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let body = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect::<Vec<_>>()
        .join(r" \\ ");
    format!(r"\begin{{array}}{{{}}}{body}\end{{array}}", "l".repeat(width))
}
