//! Markdown and TeX renderings. Both carry the same numbers as the JSON.

use std::fmt::Write;

use oblock::oracle::{Status, VerificationReport};

use crate::records::*;

pub trait Render {
    fn markdown(&self) -> String;
    fn tex(&self) -> String;
}

fn block_title(b: &BlockInfo) -> String {
    if b.walls.is_empty() {
        format!("{}, regular block", b.cartan)
    } else {
        let walls: Vec<String> = b.walls.iter().map(|w| w.to_string()).collect();
        format!("{}, walls {{{}}}", b.cartan, walls.join(","))
    }
}

/// `1,2,1` becomes `s_1s_2s_1`.
fn tex_word(w: &str) -> String {
    if w == "e" {
        return "e".into();
    }
    w.split(',').map(|s| format!("s_{{{s}}}")).collect()
}

fn tex_mod(name: &str, w: &str) -> String {
    format!("{name}_{{{}}}", tex_word(w))
}

fn md_mult(m: u64, body: String) -> String {
    if m == 1 {
        body
    } else {
        format!("{m}*{body}")
    }
}

fn tex_mult(m: u64, body: String) -> String {
    if m == 1 {
        body
    } else {
        format!("{m}{body}")
    }
}

fn md_layer(l: &Layer) -> String {
    l.simples
        .iter()
        .map(|s| md_mult(s.mult, format!("L({})", s.element)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn tex_layer(l: &Layer) -> String {
    l.simples
        .iter()
        .map(|s| tex_mult(s.mult, tex_mod("L", &s.element)))
        .collect::<Vec<_>>()
        .join(" \\oplus ")
}

fn md_flag(f: &[FlagEntry]) -> String {
    f.iter()
        .map(|e| md_mult(e.mult, format!("Delta({})<{}>", e.element, e.shift)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn tex_flag(f: &[FlagEntry]) -> String {
    f.iter()
        .map(|e| {
            tex_mult(
                e.mult,
                format!(
                    "{}\\langle {}\\rangle",
                    tex_mod("\\Delta", &e.element),
                    e.shift
                ),
            )
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn md_layers(out: &mut String, layers: &[Layer]) {
    out.push_str("| degree | simples |\n|---:|---|\n");
    for l in layers {
        let _ = writeln!(out, "| {} | {} |", l.degree, md_layer(l));
    }
}

fn tex_layers(out: &mut String, layers: &[Layer]) {
    out.push_str("\\begin{tabular}{rl}\ndegree & layer \\\\\n\\hline\n");
    for l in layers {
        let _ = writeln!(out, "${}$ & ${}$ \\\\", l.degree, tex_layer(l));
    }
    out.push_str("\\end{tabular}\n");
}

fn md_flag_table(out: &mut String, flag: &[FlagEntry]) {
    out.push_str("| Verma | shift | mult |\n|---|---:|---:|\n");
    for e in flag {
        let _ = writeln!(out, "| Delta({}) | {} | {} |", e.element, e.shift, e.mult);
    }
}

fn tex_flag_table(out: &mut String, flag: &[FlagEntry]) {
    out.push_str("\\begin{tabular}{lrr}\nVerma & shift & mult \\\\\n\\hline\n");
    for e in flag {
        let _ = writeln!(
            out,
            "${}$ & ${}$ & ${}$ \\\\",
            tex_mod("\\Delta", &e.element),
            e.shift,
            e.mult
        );
    }
    out.push_str("\\end{tabular}\n");
}

impl Render for GroupRecord {
    fn markdown(&self) -> String {
        let mut out = format!("# Weyl group {}\n\n", block_title(&self.block));
        let _ = writeln!(out, "- rank: {}", self.rank);
        let _ = writeln!(out, "- order: {}", self.order);
        let _ = writeln!(out, "- w0: {} (length {})", self.w0, self.w0_length);
        let _ = writeln!(out, "- w0 of the stabiliser: {}", self.block.w0_lambda);
        let _ = writeln!(out, "- simples: {}", self.block.simples);
        let _ = writeln!(out, "- enumeration hash: {}\n", self.enumeration_hash);
        out.push_str("| x | length | colength |\n|---|---:|---:|\n");
        for r in &self.elements {
            let _ = writeln!(out, "| {} | {} | {} |", r.element, r.length, r.colength);
        }
        out
    }

    fn tex(&self) -> String {
        let mut out = format!(
            "% Weyl group {}: rank {}, order {}, $w_0 = {}$ of length {}, $w_0^\\lambda = {}$, {} simples\n",
            block_title(&self.block),
            self.rank,
            self.order,
            tex_word(&self.w0),
            self.w0_length,
            tex_word(&self.block.w0_lambda),
            self.block.simples
        );
        out.push_str("\\begin{tabular}{lrr}\n$x$ & $\\ell(x)$ & $\\ell(w_0x)$ \\\\\n\\hline\n");
        for r in &self.elements {
            let _ = writeln!(
                out,
                "${}$ & ${}$ & ${}$ \\\\",
                tex_word(&r.element),
                r.length,
                r.colength
            );
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

fn poly_text(coeffs: &[i64], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match k {
            0 => c.to_string(),
            1 if c == 1 => var.to_string(),
            1 => format!("{c}{var}"),
            _ if c == 1 => format!("{var}^{k}"),
            _ => format!("{c}{var}^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

impl Render for KlPair {
    fn markdown(&self) -> String {
        format!(
            "# Kazhdan-Lusztig polynomial in {}\n\n| x | y | x <= y | P(x,y) | mu |\n|---|---|---|---|---:|\n| {} | {} | {} | {} | {} |\n",
            self.cartan,
            self.x,
            self.y,
            self.bruhat_leq,
            poly_text(&self.coeffs, "q"),
            self.mu
        )
    }

    fn tex(&self) -> String {
        format!(
            "% Kazhdan-Lusztig polynomial in {}\n\\begin{{tabular}}{{lllr}}\n$x$ & $y$ & $P_{{x,y}}(q)$ & $\\mu(x,y)$ \\\\\n\\hline\n${}$ & ${}$ & ${}$ & ${}$ \\\\\n\\end{{tabular}}\n",
            self.cartan,
            tex_word(&self.x),
            tex_word(&self.y),
            poly_text(&self.coeffs, "q"),
            self.mu
        )
    }
}

impl Render for KlDump {
    fn markdown(&self) -> String {
        let mut out = format!(
            "# Kazhdan-Lusztig polynomials of {}\n\n{} elements, {} pairs with P(x,y) != 1 (all other comparable pairs have P = 1)\n\n",
            self.cartan,
            self.order,
            self.entries.len()
        );
        out.push_str("| x | y | P(x,y) |\n|---|---|---|\n");
        for e in &self.entries {
            let _ = writeln!(out, "| {} | {} | {} |", e.x, e.y, poly_text(&e.coeffs, "q"));
        }
        out
    }

    fn tex(&self) -> String {
        let mut out = format!(
            "% Kazhdan-Lusztig polynomials of {}: {} elements, {} pairs with $P_{{x,y}} \\neq 1$\n",
            self.cartan,
            self.order,
            self.entries.len()
        );
        out.push_str("\\begin{tabular}{lll}\n$x$ & $y$ & $P_{x,y}(q)$ \\\\\n\\hline\n");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "${}$ & ${}$ & ${}$ \\\\",
                tex_word(&e.x),
                tex_word(&e.y),
                poly_text(&e.coeffs, "q")
            );
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

impl Render for VermaRecord {
    fn markdown(&self) -> String {
        let mut out = format!(
            "# Layers of Delta({}), {}\n\n",
            self.element,
            block_title(&self.block)
        );
        md_layers(&mut out, &self.layers);
        out
    }

    fn tex(&self) -> String {
        let mut out = format!(
            "% Layers of ${}$, {}\n",
            tex_mod("\\Delta", &self.element),
            block_title(&self.block)
        );
        tex_layers(&mut out, &self.layers);
        out
    }
}

impl Render for ProjectiveRecord {
    fn markdown(&self) -> String {
        let mut out = format!(
            "# P({}), {}\n\ndim End: {}\n\n## Verma flag\n\n",
            self.element,
            block_title(&self.block),
            self.dim_end
        );
        md_flag_table(&mut out, &self.flag);
        out.push_str("\n## Layers\n\n");
        md_layers(&mut out, &self.layers);
        out
    }

    fn tex(&self) -> String {
        let mut out = format!(
            "% ${}$, {}, $\\dim \\operatorname{{End}} = {}$\n",
            tex_mod("P", &self.element),
            block_title(&self.block),
            self.dim_end
        );
        tex_flag_table(&mut out, &self.flag);
        tex_layers(&mut out, &self.layers);
        out
    }
}

impl Render for TiltingRecord {
    fn markdown(&self) -> String {
        let mut out = format!(
            "# T({}), {}\n\n- l(w0 x): {}\n- Loewy length: {}\n- socle multiplicity: {}\n- dim End: {}\n\n## Verma flag\n\n",
            self.element,
            block_title(&self.block),
            self.colength,
            self.loewy_length,
            self.socle_multiplicity,
            self.dim_end
        );
        md_flag_table(&mut out, &self.flag);
        out.push_str("\n## Layers\n\n");
        md_layers(&mut out, &self.layers);
        out
    }

    fn tex(&self) -> String {
        let mut out = format!(
            "% ${}$, {}: $\\ell(w_0x) = {}$, Loewy length ${}$, socle multiplicity ${}$, $\\dim \\operatorname{{End}} = {}$\n",
            tex_mod("T", &self.element),
            block_title(&self.block),
            self.colength,
            self.loewy_length,
            self.socle_multiplicity,
            self.dim_end
        );
        tex_flag_table(&mut out, &self.flag);
        tex_layers(&mut out, &self.layers);
        out
    }
}

impl Render for HaziRecord {
    fn markdown(&self) -> String {
        let mut out = format!(
            "# Layer balancing for T({}), {}\n\ntie-break: {}\n\n## Steps\n\n| step | added | head degree | copies | unbalanced degree |\n|---:|---|---:|---:|---:|\n",
            self.element,
            block_title(&self.block),
            self.tie_break
        );
        for (i, s) in self.steps.iter().enumerate() {
            let _ = writeln!(
                out,
                "| {} | Delta({}) | {} | {} | {} |",
                i + 1,
                s.element,
                s.shift,
                s.copies,
                s.degree
            );
        }
        out.push_str("\n## Verma flag\n\n");
        md_flag_table(&mut out, &self.flag);
        out.push_str("\n## Layers\n\n");
        md_layers(&mut out, &self.layers);
        out
    }

    fn tex(&self) -> String {
        let mut out = format!(
            "% Layer balancing for ${}$, {}, tie-break {}\n\\begin{{tabular}}{{rlrrr}}\nstep & added & head & copies & degree \\\\\n\\hline\n",
            tex_mod("T", &self.element),
            block_title(&self.block),
            self.tie_break
        );
        for (i, s) in self.steps.iter().enumerate() {
            let _ = writeln!(
                out,
                "${}$ & ${}$ & ${}$ & ${}$ & ${}$ \\\\",
                i + 1,
                tex_mod("\\Delta", &s.element),
                s.shift,
                s.copies,
                s.degree
            );
        }
        out.push_str("\\end{tabular}\n");
        tex_flag_table(&mut out, &self.flag);
        tex_layers(&mut out, &self.layers);
        out
    }
}

impl Render for RigidityRecord {
    fn markdown(&self) -> String {
        let mut out = format!(
            "# Rigidity of tilting modules, {}\n\n| x | l(w0 x) | Loewy length | Verma flag | Ringel twist | socle | max flag mult | [Delta(w0_S):L] | rigid |\n|---|---:|---:|---|---|---:|---:|---:|---|\n",
            block_title(&self.block)
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                r.element,
                r.colength,
                r.loewy_length,
                md_flag(&r.flag),
                r.ringel,
                r.socle_multiplicity,
                r.max_flag_multiplicity,
                r.dominant_multiplicity,
                if r.rigid { "yes" } else { "no" }
            );
        }
        out
    }

    fn tex(&self) -> String {
        let mut out = format!(
            "% Rigidity of tilting modules, {}\n\\begin{{tabular}}{{lrrll}}\n$x$ & $\\ell(w_0x)$ & Loewy length & $(T_x : \\Delta)$ & rigid \\\\\n\\hline\n",
            block_title(&self.block)
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "${}$ & ${}$ & ${}$ & ${}$ & {} \\\\",
                tex_word(&r.element),
                r.colength,
                r.loewy_length,
                tex_flag(&r.flag),
                if r.rigid { "yes" } else { "no" }
            );
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skip => "skip",
    }
}

fn witness_text(c: &oblock::oracle::CheckResult) -> String {
    let mut parts = Vec::new();
    if let Some(w) = &c.witness {
        if let Some(x) = &w.x {
            parts.push(format!("x={x}"));
        }
        if let Some(y) = &w.y {
            parts.push(format!("y={y}"));
        }
        if let Some(d) = w.degree {
            parts.push(format!("degree={d}"));
        }
        parts.push(format!("expected {}, got {}", w.expected, w.actual));
    }
    if let Some(n) = &c.note {
        parts.push(n.clone());
    }
    parts.join("; ")
}

fn report_title(r: &VerificationReport) -> String {
    block_title(&BlockInfo {
        cartan: r.cartan.clone(),
        walls: r.walls.clone(),
        w0_lambda: String::new(),
        simples: r.simples,
    })
}

impl Render for VerifyRecord {
    fn markdown(&self) -> String {
        let mut out = format!(
            "# Verification: {}\n",
            if self.passed { "all passed" } else { "FAILED" }
        );
        for r in &self.reports {
            let _ = write!(
                out,
                "\n## {} ({} simples)\n\n| invariant | status | gating | details |\n|---|---|---|---|\n",
                report_title(r),
                r.simples
            );
            for c in &r.checks {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    c.id,
                    status_text(c.status),
                    if c.gating { "yes" } else { "no" },
                    witness_text(c)
                );
            }
        }
        out
    }

    fn tex(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let _ = write!(
                out,
                "% Verification of {}, {} simples\n\\begin{{tabular}}{{lll}}\ninvariant & status & gating \\\\\n\\hline\n",
                report_title(r),
                r.simples
            );
            for c in &r.checks {
                let _ = writeln!(
                    out,
                    "\\texttt{{{}}} & {} & {} \\\\",
                    c.id.replace('_', "\\_"),
                    status_text(c.status),
                    if c.gating { "yes" } else { "no" }
                );
            }
            out.push_str("\\end{tabular}\n");
        }
        out
    }
}
