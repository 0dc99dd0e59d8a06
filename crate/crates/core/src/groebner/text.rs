//! Plain-text ideal files:
//!
//! ```text
//! vars: x, y, z
//! order: block(x | y, z)
//! x - y^2
//! x*z - 1
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{Field, MonomialOrder, Poly, Ring, VarTable};

#[derive(Clone, Debug)]
pub struct ParsedIdeal {
    pub ring: Arc<Ring>,
    pub order: MonomialOrder,
    pub generators: Vec<Poly>,
}

fn split_names(list: &str) -> Vec<&str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn parse_order(spec: &str, vars: &VarTable) -> Result<MonomialOrder> {
    let spec = spec.trim();
    match spec {
        "lex" => return Ok(MonomialOrder::Lex),
        "grevlex" => return Ok(MonomialOrder::GrevLex),
        _ => {}
    }
    let inner = spec
        .strip_prefix("block(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Invalid(alloc::format!("unknown order `{spec}`")))?;
    let mut blocks = Vec::new();
    for part in inner.split('|') {
        let mut block = Vec::new();
        for name in split_names(part) {
            block.push(vars.require(name)?);
        }
        if block.is_empty() {
            return Err(Error::Invalid("empty block in order".into()));
        }
        blocks.push(block);
    }
    let order = MonomialOrder::Block(blocks);
    if !order.is_valid_for(vars.len()) {
        return Err(Error::Invalid("block order must list every variable exactly once".into()));
    }
    Ok(order)
}

pub fn parse_ideal_text(text: &str, field: Field) -> Result<ParsedIdeal> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let vars_line = lines.next().ok_or_else(|| Error::Invalid("missing `vars:` header".into()))?;
    let names = vars_line
        .strip_prefix("vars:")
        .ok_or_else(|| Error::Invalid("first line must be `vars: ...`".into()))?;
    let vars = VarTable::new(&split_names(names))?;
    let order_line = lines.next().ok_or_else(|| Error::Invalid("missing `order:` header".into()))?;
    let order_spec = order_line
        .strip_prefix("order:")
        .ok_or_else(|| Error::Invalid("second line must be `order: ...`".into()))?;
    let order = parse_order(order_spec, &vars)?;
    let ring = Ring::new(vars, field);
    let generators = lines.map(|l| Poly::parse(l, &ring)).collect::<Result<Vec<_>, _>>()?;
    Ok(ParsedIdeal { ring, order, generators })
}

fn order_text(order: &MonomialOrder, vars: &VarTable) -> String {
    match order {
        MonomialOrder::Lex => "lex".to_string(),
        MonomialOrder::GrevLex => "grevlex".to_string(),
        MonomialOrder::Block(blocks) => {
            let parts: Vec<String> = blocks
                .iter()
                .map(|b| b.iter().map(|&v| vars.name(v)).collect::<Vec<_>>().join(","))
                .collect();
            alloc::format!("block({})", parts.join(" | "))
        }
    }
}

pub fn write_ideal_text(ring: &Ring, order: &MonomialOrder, polys: &[Poly]) -> String {
    let mut out = alloc::format!("vars: {}\norder: {}\n", ring.vars().names().join(", "), order_text(order, ring.vars()));
    for p in polys {
        out.push_str(&p.to_text(order));
        out.push('\n');
    }
    out
}
