//! Bit-exact hexadecimal floating point text, in the style of C's `%a`.

use crate::element::Element;
use crate::error::{Error, Result};

/// `0x1.8p+1` for `3.0`; trailing zero nibbles are dropped.
pub fn format_hex(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { "-" } else { "" };
    let exp_bits = ((bits >> 52) & 0x7ff) as i64;
    let mantissa = bits & ((1u64 << 52) - 1);
    if exp_bits == 0 && mantissa == 0 {
        return format!("{sign}0x0p+0");
    }
    let (lead, exp) = if exp_bits == 0 { (0, -1022) } else { (1, exp_bits - 1023) };
    let mut digits = format!("{mantissa:013x}");
    while digits.ends_with('0') {
        digits.pop();
    }
    let frac = if digits.is_empty() { String::new() } else { format!(".{digits}") };
    format!("{sign}0x{lead}{frac}p{exp:+}")
}

/// Inverse of [`format_hex`].
pub fn parse_hex(s: &str) -> Result<f64> {
    let bad = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    match s {
        "nan" => return Ok(f64::NAN),
        "inf" => return Ok(f64::INFINITY),
        "-inf" => return Ok(f64::NEG_INFINITY),
        _ => {}
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let body = body.strip_prefix("0x").ok_or_else(|| bad("missing 0x prefix"))?;
    let (mant, exp) = body.split_once('p').ok_or_else(|| bad("missing exponent"))?;
    let exp: i64 = exp.parse().map_err(|_| bad("bad exponent"))?;
    let (lead, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if frac.len() > 13 {
        return Err(bad("too many fraction digits"));
    }
    let frac_bits = if frac.is_empty() {
        0
    } else {
        u64::from_str_radix(frac, 16).map_err(|_| bad("bad fraction"))? << (4 * (13 - frac.len()))
    };
    let bits = match lead {
        "0" if frac_bits == 0 => 0,
        "0" if exp == -1022 => frac_bits,
        "1" if (-1022..=1023).contains(&exp) => (((exp + 1023) as u64) << 52) | frac_bits,
        _ => return Err(bad("not a canonical hex float")),
    };
    let x = f64::from_bits(bits);
    Ok(if neg { -x } else { x })
}

/// `descriptor[x₀,x₁,…]` over the stored entries of `e`, see
/// [`Element::stored_entries`]. Parsing reproduces `e` bit for bit.
pub fn format_element(e: &Element) -> String {
    let coords: Vec<String> = e.stored_entries().into_iter().map(format_hex).collect();
    format!("{}[{}]", e.descriptor(), coords.join(","))
}

/// Inverse of [`format_element`].
pub fn parse_element(s: &str) -> Result<Element> {
    let bad = || Error::Parse {
        input: s.to_string(),
        reason: "expected `descriptor[coords]`".into(),
    };
    let (desc, rest) = s.split_once('[').ok_or_else(bad)?;
    let body = rest.strip_suffix(']').ok_or_else(bad)?;
    let desc = desc.parse()?;
    let coords = if body.is_empty() {
        Vec::new()
    } else {
        body.split(',').map(parse_hex).collect::<Result<Vec<_>>>()?
    };
    Element::from_stored_entries(&desc, &coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(format_hex(1.0), "0x1p+0");
        assert_eq!(format_hex(3.0), "0x1.8p+1");
        assert_eq!(format_hex(-0.1), "-0x1.999999999999ap-4");
        assert_eq!(format_hex(0.0), "0x0p+0");
        assert_eq!(format_hex(-0.0), "-0x0p+0");
        assert_eq!(format_hex(f64::MIN_POSITIVE / 4.0), "0x0.4p-1022");
    }

    #[test]
    fn round_trip() {
        for x in [1.0, -2.5, 1e-300, 5e-324, f64::MAX, std::f64::consts::PI, -0.0, 0.1 + 0.2] {
            let back = parse_hex(&format_hex(x)).unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{x}");
        }
        assert!(parse_hex("1.5").is_err());
        assert!(parse_hex("0x2p+0").is_err());
    }

    #[test]
    fn element_round_trip_is_exact() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for d in ["complex:2+spin:3", "quat:3", "real:3+quat:1"] {
            let d: crate::descriptor::AlgebraDescriptor = d.parse().unwrap();
            let a = crate::random::random_element(&d, &mut rng);
            let b = &a.square() - &a.scale(0.3);
            for e in [a, b] {
                assert_eq!(parse_element(&format_element(&e)).unwrap(), e);
            }
        }
    }
}
