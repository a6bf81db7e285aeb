use super::Permutation;
use crate::error::{Error, Result};

pub(super) fn format(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "e".to_string();
    }
    let mut out = String::new();
    for cycle in cycles {
        out.push('(');
        let items: Vec<String> = cycle.iter().map(u32::to_string).collect();
        out.push_str(&items.join(","));
        out.push(')');
    }
    out
}

pub(super) fn parse(text: &str, degree: usize) -> Result<Permutation> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    if compact == "e" || compact.is_empty() {
        return Ok(Permutation::from_images_unchecked(images));
    }
    let mut used = vec![false; degree];
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::CycleParse(format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::CycleParse("unclosed '('".into()))?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(Error::CycleParse("nested '('".into()));
        }
        if inner.is_empty() {
            return Err(Error::CycleParse("empty cycle".into()));
        }
        let labels = inner
            .split(',')
            .map(|s| {
                s.parse::<u32>()
                    .map_err(|_| Error::CycleParse(format!("invalid label {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        for &label in &labels {
            let slot = used
                .get_mut(label as usize)
                .ok_or_else(|| Error::CycleParse(format!("label {label} >= {degree}")))?;
            if std::mem::replace(slot, true) {
                return Err(Error::CycleParse(format!("repeated label {label}")));
            }
        }
        for (i, &label) in labels.iter().enumerate() {
            images[label as usize] = labels[(i + 1) % labels.len()];
        }
        rest = &body[close + 1..];
    }
    Ok(Permutation::from_images_unchecked(images))
}
