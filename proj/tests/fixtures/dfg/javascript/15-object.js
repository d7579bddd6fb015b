const k = "a";
const o = { [k]: v, w };
o.z = o[k];
