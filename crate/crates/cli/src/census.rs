use orthochar2::linalg::BitMatrix;
use orthochar2::ortho::{orthogonal_elements_in, GroupCensus};
use orthochar2::quadform::QuadraticForm;
use orthochar2::scalars::Gf2;
use orthochar2::Error;

use crate::report::Line;
use crate::suites::unit_sum;

/// `O(Q)(GF(2))`, with the candidate range split into `threads` contiguous shards whose
/// results are concatenated in shard order.
pub fn sharded_elements(q: &QuadraticForm<Gf2>, threads: usize) -> Result<Vec<BitMatrix>, Error> {
    let total = 1u64 << (q.dim() * q.dim()).min(63);
    let threads = threads.max(1) as u64;
    if threads == 1 {
        return orthogonal_elements_in(q, 0..total);
    }
    let chunk = total.div_ceil(threads);
    let shards: Vec<Result<Vec<BitMatrix>, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|i| {
                let range = (i * chunk).min(total)..((i + 1) * chunk).min(total);
                scope.spawn(move || orthogonal_elements_in(q, range))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("enumeration thread panicked")).collect()
    });
    let mut out = Vec::new();
    for shard in shards {
        out.extend(shard?);
    }
    Ok(out)
}

/// Report lines for an enumerated group; `expected` pins `(order, dickson-0 order)`.
pub fn census_lines(prefix: &str, q: &QuadraticForm<Gf2>, elements: &[BitMatrix], expected: Option<(usize, usize)>) -> Vec<Line> {
    let c = GroupCensus::from_elements(q, elements);
    let n = q.dim();
    let radical = q.polarize().radical();
    let mut lines = Vec::new();
    lines.push(
        Line::check(format!("{prefix}.nondegenerate"), q.is_nondegenerate())
            .witness("radical", || radical.basis().first().map(|v| unit_sum(v)).unwrap_or_default()),
    );
    let order = match expected {
        Some((order, _)) => Line::check(format!("{prefix}.order"), c.order == order),
        None => Line::info(format!("{prefix}.order")),
    };
    lines.push(order.kv("order", c.order));
    let even = n.is_multiple_of(2) && q.is_nondegenerate();
    let kernel = match expected {
        Some((_, dz)) => Line::check(format!("{prefix}.kernel"), c.dickson_zero_order == dz && 2 * dz == c.order),
        None if even => Line::check(format!("{prefix}.kernel"), 2 * c.dickson_zero_order == c.order),
        None => Line::info(format!("{prefix}.kernel")),
    };
    let index = c.order.checked_div(c.dickson_zero_order).unwrap_or(0);
    lines.push(kernel.kv("order", c.dickson_zero_order).kv("index", index));
    lines.push(Line::check(format!("{prefix}.closed"), c.closed).kv("pairs", c.order * c.order));
    lines.push(Line::check(format!("{prefix}.homomorphism"), c.dickson_additive));
    lines.push(Line::check(format!("{prefix}.det"), c.det_one));
    if n % 2 == 1 && radical.dim() > 0 {
        lines.push(
            Line::check(format!("{prefix}.radical"), c.fixes_radical)
                .kv("radical", unit_sum(&radical.basis()[0])),
        );
    }
    lines
}
