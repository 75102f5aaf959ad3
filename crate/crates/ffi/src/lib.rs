#[no_mangle]
pub extern "C" fn lf_placeholder() -> u32 { lendfair::placeholder() }
