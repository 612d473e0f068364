use serde_json::{json, Value};

use super::Presentation;
use crate::algebra::LyAlgebra;
use crate::poly::{format_polynomial, Var};

fn labels(l: &LyAlgebra) -> Vec<String> {
    (0..l.dim()).map(|i| l.label(i)).collect()
}

impl Presentation {
    /// Canonical text dump: basis labels, variables and the labelled
    /// generators exactly as emitted.
    pub fn dump_text(&self) -> String {
        let (n, m) = self.dims();
        let mut out = String::new();
        out.push_str(&format!("# universal algebra A(L,K), dim L = {n}, dim K = {m}\n"));
        out.push_str(&format!("basis L: {}\n", labels(self.l()).join(" ")));
        out.push_str(&format!("basis K: {}\n", labels(self.k()).join(" ")));
        out.push_str(&format!("order: {}\n", self.order().name()));
        let vars: Vec<String> = self.vars().vars().iter().map(Var::to_string).collect();
        out.push_str(&format!("variables ({}): {}\n", vars.len(), vars.join(" ")));
        out.push_str(&format!("P generators ({}):\n", self.p_generators().len()));
        for g in self.p_generators() {
            out.push_str(&format!("{} = {}\n", g.name(), format_polynomial(&g.poly)));
        }
        out.push_str(&format!("Q generators ({}):\n", self.q_generators().len()));
        for g in self.q_generators() {
            out.push_str(&format!("{} = {}\n", g.name(), format_polynomial(&g.poly)));
        }
        out
    }

    pub fn dump_json(&self) -> Value {
        let (n, m) = self.dims();
        let gens = |list: &[super::Generator]| -> Vec<Value> {
            list.iter().map(|g| json!({ "name": g.name(), "poly": format_polynomial(&g.poly) })).collect()
        };
        json!({
            "dim_l": n,
            "dim_k": m,
            "basis_l": labels(self.l()),
            "basis_k": labels(self.k()),
            "order": self.order().name(),
            "variables": self.vars().vars().iter().map(Var::to_string).collect::<Vec<_>>(),
            "p": gens(self.p_generators()),
            "q": gens(self.q_generators()),
            "ideal": self.ideal().generators().iter().map(format_polynomial).collect::<Vec<_>>(),
        })
    }

    /// A Singular input file declaring the ring and the ideal, one
    /// generator per line. Variables `x[s,i]` become `x_s_i`.
    pub fn cas_script(&self) -> String {
        let rename = |text: String| {
            let mut out = String::with_capacity(text.len());
            let chars = text.chars().peekable();
            for c in chars {
                match c {
                    '[' => out.push('_'),
                    ',' => out.push('_'),
                    ']' => {}
                    _ => out.push(c),
                }
            }
            out
        };
        let vars: Vec<String> = self.vars().vars().iter().map(|v| rename(v.to_string())).collect();
        let ord = match self.order() {
            crate::poly::MonoOrder::DegRevLex => "dp",
            crate::poly::MonoOrder::Lex => "lp",
        };
        let mut out = String::new();
        out.push_str(&format!("ring r = 0, ({}), {ord};\n", vars.join(", ")));
        let gens = self.ideal().generators();
        if gens.is_empty() {
            out.push_str("ideal J = 0;\n");
        } else {
            out.push_str("ideal J =\n");
            for (k, g) in gens.iter().enumerate() {
                let sep = if k + 1 == gens.len() { ";" } else { "," };
                out.push_str(&format!("  {}{sep}\n", rename(format_polynomial(g))));
            }
        }
        out.push_str("ideal G = std(J);\n");
        out
    }
}
