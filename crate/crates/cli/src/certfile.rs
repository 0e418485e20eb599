//! Certificate serialization: ordered `key=value` lines and a blank line.

use ewmat::seidel::Certificate;
use ewmat::IntPoly;

fn clean(v: &str) -> String {
    v.replace(['\n', '\r'], " ")
}

pub fn coefficients(p: &IntPoly) -> String {
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn render(cert: &Certificate) -> String {
    let mut out = format!("property={}\nresult={}\n", cert.property, cert.verdict);
    if let Some(t) = cert.t {
        out.push_str(&format!("t={t}\n"));
    }
    if let Some(p) = &cert.charpoly {
        out.push_str(&format!("charpoly={}\n", coefficients(p)));
    }
    for (k, v) in &cert.witness {
        out.push_str(&format!("{}={}\n", clean(k), clean(v)));
    }
    if let Some(r) = &cert.reason {
        out.push_str(&format!("reason={}\n", clean(r)));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_order() {
        let cert = Certificate::fail("ew", "bad\nrow")
            .with_t(1)
            .with_charpoly(IntPoly::from_i64(&[1, 0, 1]))
            .with_witness("abs_det", 160);
        assert_eq!(render(&cert), "property=ew\nresult=FAIL\nt=1\ncharpoly=1 0 1\nabs_det=160\nreason=bad row\n\n");
    }
}
