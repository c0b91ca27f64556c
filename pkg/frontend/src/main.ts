import { mount } from './ui.js';

const root = document.getElementById('app');
if (!root) throw new Error('missing #app element');
mount(root);
