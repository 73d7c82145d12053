use core::sync::atomic::{AtomicUsize, Ordering};

use crate::{Error, Result};

/// Default maximum number of entries in any table the crate will build.
pub const DEFAULT_TABLE_LIMIT: usize = 1 << 24;

static TABLE_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_TABLE_LIMIT);

/// Current table-size guard (process wide).
pub fn table_limit() -> usize {
    TABLE_LIMIT.load(Ordering::Relaxed)
}

pub fn set_table_limit(limit: usize) {
    TABLE_LIMIT.store(limit, Ordering::Relaxed);
}

/// `base^exp`, or `None` on overflow.
pub fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    let exp = u32::try_from(exp).ok()?;
    base.checked_pow(exp)
}

/// `base^exp` as a table length, rejected when above the guard.
pub(crate) fn table_len(base: usize, exp: usize) -> Result<usize> {
    let limit = table_limit();
    match checked_pow(base, exp) {
        Some(len) if len <= limit => Ok(len),
        _ => Err(Error::TableTooLarge { limit }),
    }
}
