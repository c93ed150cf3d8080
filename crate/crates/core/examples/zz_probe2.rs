use graphshift::{cayley, config::Caps, sft::*};
use std::sync::Mutex;
fn main() {
    let hs = cayley::hard_square();
    let e = SftDefinition::new(hs.alphabets().clone(), Mode::Forbid, vec![]).unwrap();
    let all = Mutex::new(Vec::new());
    for_each_member(&e, 3, &Caps::default(), |x| { let mut a = all.lock().unwrap(); if a.len() < 300000 { a.push(x.clone()) } }).unwrap();
    let all = all.into_inner().unwrap();
    let allow = to_allow_form_symbolic(&hs);
    let forbid = to_forbid_form_symbolic(&allow);
    for (n, d) in [("d", &hs), ("allow", &allow), ("forbid", &forbid)] {
        let t = std::time::Instant::now();
        let c = all.iter().filter(|x| is_member(d, x)).count();
        println!("{n}: {c} members {:?}", t.elapsed());
    }
}
